#pragma once

#include <optional>
#include <vector>

#include "modrep/groups/group.hpp"
#include "modrep/rep/decompose.hpp"
#include "modrep/rep/hom.hpp"
#include "modrep/rep/module.hpp"

namespace modrep::rep {

struct ProjectiveCover {
  Module cover;
  /// dim M x dim cover, surjective intertwiner.
  Matrix surjection;
};

/// kG over a fixed field, with lazily computed simples and projective
/// indecomposables. Not thread-safe: queries fill caches and draw from the
/// shared Search.
class GroupAlgebra {
 public:
  GroupAlgebra(GroupPtr G, FieldPtr F, std::uint64_t seed = 1, unsigned retries = 64);

  const GroupPtr& group() const noexcept { return G_; }
  const FieldPtr& field() const noexcept { return F_; }
  std::uint32_t characteristic() const noexcept { return F_->characteristic(); }
  Search& search() const noexcept { return search_; }

  const Module& regular() const;
  const Module& trivial() const;
  Module zero() const;
  const groups::Subgroup& sylow() const;

  /// Pairwise non-isomorphic simples: trivial first, then by dimension, then
  /// by the traces of the generator matrices.
  const std::vector<Module>& simples() const;
  /// Projective cover of simples()[i], same order.
  const std::vector<Module>& pims() const;
  /// dim End(S_i); all 1 exactly when the field is a splitting field.
  const std::vector<std::size_t>& simple_end_dims() const;
  bool is_split() const;
  /// Index of the simple isomorphic to S.
  std::size_t simple_index(const Module& S) const;

  /// [M : S_i] = dim Hom(P_i, M) / dim End(S_i).
  std::vector<std::size_t> composition_multiplicities(const Module& M) const;
  /// Multiplicity of S_i in the top of M: dim Hom(M, S_i) / dim End(S_i).
  std::vector<std::size_t> top_multiplicities(const Module& M) const;

  /// Intersection of the kernels of all homomorphisms to simples (columns).
  Matrix radical(const Module& M) const;
  /// Sum of the images of all homomorphisms from simples (columns).
  Matrix socle(const Module& M) const;
  Module top(const Module& M) const;

  /// Restriction to a Sylow p-subgroup is free: the norm element of the
  /// Sylow subgroup acts with rank dim M / |P|.
  bool is_projective(const Module& M) const;

  ProjectiveCover projective_cover(const Module& M) const;
  /// Kernel of a projective cover; never has projective summands.
  Module omega(const Module& M) const;
  Module omega_inv(const Module& M) const;
  /// Omega^t for t > 0, Omega^-t for t < 0, the non-projective part for 0.
  Module omega_power(const Module& M, int t) const;
  /// Sum of the non-projective indecomposable summands.
  Module projective_free_part(const Module& M) const;

  /// Homomorphisms M -> N that factor through a projective: the span of the
  /// traces sum_g rho_N(g) n e_t^T rho_M(g^-1) over module generators n of N.
  HomBasis phom_basis(const Module& M, const Module& N) const;
  std::size_t phom_dim(const Module& M, const Module& N) const;
  /// dim Hom(M, N) - dim PHom(M, N).
  std::size_t stable_hom_dim(const Module& M, const Module& N) const;

 private:
  void compute_simples() const;

  GroupPtr G_;
  FieldPtr F_;
  mutable Search search_;
  mutable std::optional<Module> regular_;
  mutable std::optional<Module> trivial_;
  mutable groups::SubgroupPtr sylow_;
  mutable bool have_simples_ = false;
  mutable std::vector<Module> simples_;
  mutable std::vector<Module> pims_;
  mutable std::vector<std::size_t> end_dims_;
};

/// End(kG) as right multiplications R_x e_h = e_{hx}.
HomBasis regular_endomorphisms(const Module& regular);

}  // namespace modrep::rep
