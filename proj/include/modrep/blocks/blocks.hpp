#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "modrep/rep/algebra.hpp"

namespace modrep::blocks {

using rep::GroupAlgebra;
using rep::Module;
using Naturals = std::vector<std::vector<std::size_t>>;

/// Blocks of kG as connected components of Cartan linkage among simples.
/// Simples and PIMs follow GroupAlgebra's order; block 0 holds the trivial
/// module and the others are ordered by their smallest simple index.
struct BlockPartition {
  std::vector<Module> simples;
  std::vector<Module> pims;
  std::vector<std::size_t> end_dims;
  /// cartan[i][j] = [P_i : S_j].
  Naturals cartan;
  /// Simple indices per block, ascending.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of_simple;
  std::vector<bool> defect_zero;
  bool split = true;

  std::size_t count() const noexcept { return blocks.size(); }
  /// Simples of dimension d in block b.
  std::size_t simples_of_dim(std::size_t b, std::size_t d) const;
  nlohmann::ordered_json to_json() const;
};

/// Cartan matrix over a splitting field; throws NonSplitField otherwise.
Naturals cartan_matrix(const GroupAlgebra& A);

/// Over a non-split field multiplicities are measured in units of End(S_j),
/// which leaves linkage and blocks unchanged; split records which case held.
BlockPartition block_partition(const GroupAlgebra& A);

/// Block of M when every composition factor lies in one block; otherwise
/// the composition length per block.
struct Membership {
  std::optional<std::size_t> block;
  std::vector<std::size_t> distribution;
};
Membership block_of(const BlockPartition& bp, const GroupAlgebra& A, const Module& M);

/// Every PIM of block b is simple.
bool is_defect_zero(const BlockPartition& bp, std::size_t b);

}  // namespace modrep::blocks
