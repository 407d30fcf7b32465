#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modrep/blocks/blocks.hpp"
#include "modrep/rep/algebra.hpp"
#include "modrep/varieties/varieties.hpp"

namespace modrep::extblocks {

using blocks::BlockPartition;
using rep::GroupAlgebra;
using rep::Module;
using varieties::Line;

/// dim PHom(M, N): homomorphisms factoring through a projective.
std::size_t phom_dim(const GroupAlgebra& A, const Module& M, const Module& N);
/// dim Hom(M, N) - dim PHom(M, N).
std::size_t stable_hom_dim(const GroupAlgebra& A, const Module& M, const Module& N);
/// Entry i + w is dim stHom(Omega^i M, N) for i = -w..w.
std::vector<std::size_t> tate_ext_window(const GroupAlgebra& A, const Module& M, const Module& N, unsigned w);

/// Isomorphism classes of nonprojective indecomposable kG-modules with
/// memoized Omega links and stable Hom dimensions.
class StableStore {
 public:
  StableStore(const GroupAlgebra& A, const BlockPartition& bp);

  /// Index of the class of M, which must be indecomposable and nonprojective.
  std::size_t add(const Module& M);
  std::size_t size() const noexcept { return mods_.size(); }
  const Module& module(std::size_t i) const { return mods_[i]; }
  std::size_t block(std::size_t i) const { return blocks_[i]; }
  /// Class of Omega^t of class i.
  std::size_t omega(std::size_t i, int t);
  std::size_t stable_hom(std::size_t i, std::size_t j);
  /// Entry t + w is dim stHom(Omega^t i, j).
  std::vector<std::size_t> window(std::size_t i, std::size_t j, unsigned w);

  const GroupAlgebra& algebra() const noexcept { return A_; }
  const BlockPartition& partition() const noexcept { return bp_; }

 private:
  const GroupAlgebra& A_;
  const BlockPartition& bp_;
  std::vector<Module> mods_;
  std::vector<std::size_t> blocks_;
  std::vector<std::optional<std::size_t>> next_, prev_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> sthom_;
};

/// Linkage classes of the simples of positive-defect blocks under nonzero
/// Tate window entries, as sorted lists of simple indices.
std::vector<std::vector<std::size_t>> simple_tate_partition(StableStore& store, unsigned w);

/// Pairwise non-isomorphic indecomposable summands of dual(X) (x) S over the
/// simples S, optionally only those in block b. Every member is checked to
/// be nonprojective with rank variety equal to the orbit of the line.
std::vector<Module> generating_family(const GroupAlgebra& A, const BlockPartition& bp, const Module& X,
                                      const Line& line, std::optional<std::size_t> b = std::nullopt);

/// Sum of the indecomposable summands of M restricted to H whose rank
/// variety contains the line.
Module benson_transport(const Module& M, const groups::Subgroup& H, const Line& line, rep::Search& search);

struct FamilyMember {
  Module module;
  std::string tag;
  /// "seed", "omega(m3)", "omega^-1(m3)" or "Y1(m3)".
  std::string origin;
  std::size_t kg_block = 0;
  /// kH-block of the Benson transport, when it lies in a single block.
  std::optional<std::size_t> kh_label;
  std::size_t graph_class = 0;
};

/// One nonzero Tate window entry: dim stHom(Omega^degree from, to).
struct TateEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int degree = 0;
  std::size_t dim = 0;
};

struct LemmaCheck {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json data;
};

struct ExtBlockReport {
  unsigned window = 0;
  std::vector<FamilyMember> family;
  /// Connected components of the Tate-linkage graph, by member index.
  std::vector<std::vector<std::size_t>> graph_partition;
  std::vector<TateEdge> edges;
  bool has_benson = false;
  bool refines_kg_blocks = false;
  /// Graph classes are exactly the fibres of the Benson labels.
  std::optional<bool> agrees_with_benson;
  std::vector<LemmaCheck> lemma_results;

  /// Number of ext-blocks met in each kG-block (graph partition).
  std::map<std::size_t, std::size_t> classes_per_kg_block() const;
  /// Same, counting distinct Benson labels.
  std::map<std::size_t, std::size_t> labels_per_kg_block() const;
  nlohmann::ordered_json to_json() const;
  /// One node per member ("dim, kG-block, kH-label"), one edge per nonzero
  /// Tate window entry.
  std::string to_dot() const;
};

/// Input of the partition: a family, optionally the stabilizer H with its
/// block partition for Benson labels, and a character for Y-enrichment.
struct PartitionInput {
  std::vector<Module> family;
  unsigned window = 0;
  const groups::Subgroup* H = nullptr;
  const GroupAlgebra* AH = nullptr;
  const BlockPartition* bpH = nullptr;
  const varieties::Character* chi = nullptr;
  std::optional<Line> line;
};

/// Enriches the family under Omega^{+-1} (up to the window) and Y_1 (x) -,
/// then links members whose Tate window has a nonzero entry.
ExtBlockReport ext_block_partition(StableStore& store, const PartitionInput& in);

/// kH-block label to kG-block. Throws AssertionFailure when a label meets
/// two kG-blocks.
std::map<std::size_t, std::size_t> block_correspondence_map(const ExtBlockReport& report);

/// Ingredients of the lemma checks for a G-stable line.
struct LemmaInput {
  Module X;
  varieties::ShiftedElem u;
  varieties::Character chi;
  unsigned window = 0;
  /// Samples M in C_V for the nonvanishing window check.
  std::vector<Module> samples;
  /// Restrict the PIM-pair check to one block (all blocks when empty).
  std::optional<std::size_t> pair_block;
};

/// Window nonvanishing, Omega twists of the X_j by Y, and stable Hom
/// between twisted X_i, X_j for linked PIMs. Also measures e with
/// Omega^2(X_j) = Y_e (x) X_j.
std::vector<LemmaCheck> verify_lemma_suite(StableStore& store, const LemmaInput& in);

}  // namespace modrep::extblocks
