#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modrep/ffla/matrix.hpp"

namespace modrep::groups {

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

inline constexpr std::size_t kMaxGroupOrder = 2000;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group stored as its Cayley table. Index 0 is the identity.
///
/// Every element e other than the identity has a BFS parent and a generator
/// with e = gens[gen] * parent, so word(e) lists generator positions whose
/// left-to-right product is e.
class Group {
 public:
  /// Verifies the group axioms; table[a * n + b] = a*b.
  static GroupPtr from_table(std::vector<Elem> table, std::vector<Elem> gens, std::string name = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// g a g^-1
  Elem conj(Elem g, Elem a) const noexcept { return mul(mul(g, a), inv_[g]); }
  Elem pow(Elem a, long long k) const;
  std::uint64_t element_order(Elem a) const noexcept { return orders_[a]; }

  const std::vector<Elem>& gens() const noexcept { return gens_; }
  /// Generator positions; the product of gens()[w[0]] gens()[w[1]] ... is e.
  std::vector<std::size_t> word(Elem e) const;
  Elem evaluate_word(const std::vector<std::size_t>& w) const;
  /// BFS tree: e = gens()[via(e)] * parent(e) for e != 0.
  Elem parent(Elem e) const noexcept { return parent_[e]; }
  std::size_t via(Elem e) const noexcept { return via_[e]; }
  /// Elements in BFS order (identity first).
  const std::vector<Elem>& bfs_order() const noexcept { return bfs_; }

  bool is_abelian() const noexcept;

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::string name_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<Elem> gens_;
  std::vector<Elem> parent_;
  std::vector<std::size_t> via_;
  std::vector<Elem> bfs_;
};

/// Closure of a list of permutations (images of 0..d-1). gens() of the result
/// are the given permutations in order.
GroupPtr group_from_generators(const std::vector<Perm>& perms, std::string name = {});
GroupPtr cyclic(std::size_t n);
GroupPtr elementary_abelian(std::uint32_t p, unsigned rank);
/// Element (a, b) has index a + |A| b; gens are A's followed by B's.
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);
/// H x| C_m with z h z^-1 = phi(h), where phi sends gens()[i] of H to
/// images[i]. Element (h, c) = h z^c has index h + |H| c; gens are H's
/// followed by z. Throws unless phi is an automorphism with phi^m = 1.
GroupPtr semidirect(const GroupPtr& H, std::size_t m, const std::vector<Elem>& images);

/// A subgroup with its own table. Elements keep the parent's relative order,
/// so index i of group() is parent element elements()[i].
class Subgroup {
 public:
  Subgroup(GroupPtr parent, const std::vector<Elem>& gens);

  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_->order() / elements_.size(); }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  Elem to_parent(Elem h) const noexcept { return elements_[h]; }
  bool contains(Elem g) const noexcept { return local_[g] >= 0; }
  /// Local index of a parent element; throws if g is not in the subgroup.
  Elem to_local(Elem g) const;

  /// Smallest-index representative of each left coset gH.
  const std::vector<Elem>& transversal() const noexcept { return transversal_; }
  /// g = transversal()[coset_of(g)] * to_parent(coset_part(g)).
  std::size_t coset_of(Elem g) const noexcept { return coset_[g]; }
  Elem coset_part(Elem g) const noexcept { return part_[g]; }

 private:
  GroupPtr parent_;
  GroupPtr group_;
  std::vector<Elem> elements_;
  std::vector<long> local_;
  std::vector<Elem> transversal_;
  std::vector<std::size_t> coset_;
  std::vector<Elem> part_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

SubgroupPtr subgroup(const GroupPtr& G, const std::vector<Elem>& gens);
/// Subgroup of G made of the given elements (must be closed).
SubgroupPtr subgroup_of_elements(const GroupPtr& G, const std::vector<Elem>& elems);
SubgroupPtr centralizer(const GroupPtr& G, const Subgroup& S);
SubgroupPtr normalizer(const GroupPtr& G, const Subgroup& S);
/// A Sylow p-subgroup, grown by adjoining p-elements of normalizers.
SubgroupPtr sylow(const GroupPtr& G, std::uint32_t p);

/// An elementary abelian p-subgroup with an ordered basis x_1..x_r.
class ElementaryAbelianBasis {
 public:
  /// Throws unless the basis elements commute, have order p and are
  /// independent.
  ElementaryAbelianBasis(GroupPtr G, std::vector<Elem> basis, std::uint32_t p);

  const GroupPtr& group() const noexcept { return G_; }
  const SubgroupPtr& subgroup() const noexcept { return E_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Exponent vector of a parent element of E.
  std::vector<std::uint32_t> exponents(Elem e) const;
  Elem element(const std::vector<std::uint32_t>& exps) const;

 private:
  GroupPtr G_;
  SubgroupPtr E_;
  std::vector<Elem> basis_;
  std::uint32_t p_;
  std::vector<long> code_;  // parent element -> exponent code in base p
};

/// Column i holds the exponents of g x_i g^-1; g must normalize E. The map
/// g -> matrix is a homomorphism.
ffla::Matrix conj_matrix_on_E(const ElementaryAbelianBasis& E, Elem g);

}  // namespace modrep::groups
