#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "modrep/ffla/matrix.hpp"
#include "modrep/groups/group.hpp"

namespace modrep::rep {

using ffla::FieldPtr;
using ffla::Matrix;
using ffla::Scalar;
using ffla::Vector;
using groups::Elem;
using groups::GroupPtr;

/// Seeded randomness plus a retry budget, threaded through every randomized
/// search so results are reproducible.
struct Search {
  explicit Search(std::uint64_t seed_ = 1, unsigned retries_ = 64) : rng(seed_), seed(seed_), retries(retries_) {}
  std::mt19937_64 rng;
  std::uint64_t seed;
  unsigned retries;

  Scalar scalar(const ffla::Field& F) { return static_cast<Scalar>(rng() % F.order()); }
};

/// A kG-module on column vectors: rho(gh) = rho(g) rho(h).
///
/// Only generator matrices are stored. Element matrices are derived along the
/// group's BFS tree on first use and memoized; copies share the cache.
class Module {
 public:
  Module() = default;
  Module(GroupPtr G, FieldPtr F, std::vector<Matrix> gen_mats, std::string label = {});

  const GroupPtr& group() const noexcept;
  const FieldPtr& field() const noexcept;
  std::size_t dim() const noexcept;
  const std::vector<Matrix>& gen_mats() const noexcept;
  const std::string& label() const noexcept;
  Module relabeled(std::string label) const;
  bool valid() const noexcept { return static_cast<bool>(impl_); }

  /// rho(g), memoized.
  const Matrix& mat(Elem g) const;
  /// rho applied to a group-algebra element given by coefficients on G.
  Matrix algebra_element(const std::vector<Scalar>& coeffs) const;

  /// Checks that the generator matrices respect every relation of the group:
  /// rho(s) rho(e) = rho(s e) for each generator s and element e. With
  /// exhaustive = false only a random sample of pairs is checked.
  void validate(bool exhaustive, Search* search = nullptr) const;

  /// "dim p n group-tag", then one matrix dump per generator.
  std::string dump() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

Module trivial_module(const GroupPtr& G, const FieldPtr& F);
/// Left translation on the basis {e_h}: rho(g) e_h = e_{gh}.
Module regular_module(const GroupPtr& G, const FieldPtr& F);
/// One-dimensional module with the given scalar for each generator.
Module character_module(const GroupPtr& G, const FieldPtr& F, const std::vector<Scalar>& gen_values);

Module direct_sum(const Module& M, const Module& N);
Module direct_sum(const std::vector<Module>& parts, const GroupPtr& G, const FieldPtr& F);
Module tensor(const Module& M, const Module& N);
/// rho*(g) = rho(g^-1)^T.
Module dual(const Module& M);
/// S must be a subgroup of M's group.
Module restrict(const Module& M, const groups::Subgroup& S);
/// M must be a module for S.group(). Basis t_j (x) m_i over the transversal,
/// ordered coset-major.
Module induce(const Module& M, const groups::Subgroup& S);

/// Same module in the basis given by the columns of P: P^-1 rho P.
Module change_basis(const Module& M, const Matrix& P);

/// Basis (columns) of the submodule generated by the seeds.
Matrix spin(const Module& M, const std::vector<Vector>& seeds);
/// Action on an invariant subspace given by independent columns.
Module submodule(const Module& M, const Matrix& basis);
/// Action on M / span(basis).
Module quotient(const Module& M, const Matrix& basis);
/// Extends independent columns to an invertible matrix [basis | complement]
/// using standard basis vectors.
Matrix complete_basis(const Matrix& basis);

bool same_group(const Module& M, const Module& N);
/// Throws InvalidArgument unless M and N share group and field.
void require_compatible(const Module& M, const Module& N, const char* what);

}  // namespace modrep::rep
