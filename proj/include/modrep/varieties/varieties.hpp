#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modrep/blocks/blocks.hpp"
#include "modrep/groups/group.hpp"
#include "modrep/rep/algebra.hpp"
#include "modrep/rep/module.hpp"

namespace modrep::varieties {

using ffla::FieldPtr;
using ffla::Scalar;
using groups::Elem;
using groups::GroupPtr;
using rep::Module;
using EBasisPtr = std::shared_ptr<const groups::ElementaryAbelianBasis>;

/// A line through alpha in the rank variety of E, with alpha scaled so that
/// its first nonzero coordinate is 1. Lines are equal iff their alphas are
/// proportional.
class Line {
 public:
  Line(EBasisPtr E, FieldPtr F, std::vector<Scalar> alpha);

  const EBasisPtr& E() const noexcept { return E_; }
  const FieldPtr& field() const noexcept { return F_; }
  const std::vector<Scalar>& alpha() const noexcept { return alpha_; }
  /// "(g^0, g^9)"
  std::string format() const;

  bool operator==(const Line& o) const noexcept { return alpha_ == o.alpha_; }
  bool operator<(const Line& o) const noexcept { return alpha_ < o.alpha_; }

 private:
  EBasisPtr E_;
  FieldPtr F_;
  std::vector<Scalar> alpha_;
};

/// Every line of the rank variety of E when there are at most limit of them,
/// otherwise limit lines spread evenly over the enumeration order.
std::vector<Line> sample_lines(const EBasisPtr& E, const FieldPtr& F, std::size_t limit);

/// Comma-separated field tokens, e.g. "1, g^3".
Line parse_line(const EBasisPtr& E, const FieldPtr& F, std::string_view text);

/// An element of kG, by coefficients on the elements of G.
struct AlgebraElem {
  GroupPtr group;
  FieldPtr field;
  std::vector<Scalar> coeffs;

  AlgebraElem operator*(const AlgebraElem& o) const;
  AlgebraElem operator+(const AlgebraElem& o) const;
  AlgebraElem operator-(const AlgebraElem& o) const;
  AlgebraElem scaled(Scalar s) const;
  AlgebraElem power(unsigned e) const;
  /// g a g^-1
  AlgebraElem conjugated(Elem g) const;
  Scalar augmentation() const;
  bool is_zero() const;
  bool operator==(const AlgebraElem& o) const { return coeffs == o.coeffs; }
};

AlgebraElem algebra_zero(const GroupPtr& G, const FieldPtr& F);
AlgebraElem algebra_basis(const GroupPtr& G, const FieldPtr& F, Elem g);
/// The same element as an element of k[S.group()]; the support must lie in S.
AlgebraElem restrict_to(const AlgebraElem& a, const groups::Subgroup& S);

/// An element of the augmentation ideal of kE whose p-th power is 0, living
/// in kG for the parent group G of E.
struct ShiftedElem {
  EBasisPtr E;
  AlgebraElem value;
};

/// u_alpha - 1 = sum alpha_i (x_i - 1).
ShiftedElem shifted_unit(const Line& line);
/// Membership in the square of the augmentation ideal of kE.
bool in_rad_square(const EBasisPtr& E, const AlgebraElem& a);

/// alpha_1..alpha_n are linearly independent over the prime field.
bool fp_independent(const Line& line);

/// M restricted to <1 + u> is free: p | dim M and u^(p-1) has rank dim M / p.
/// u must be an element of k[M.group()].
bool is_free_over(const Module& M, const AlgebraElem& u);

/// The line lies in the rank variety of M, for M over E's parent group.
bool line_in_module_variety(const Module& M, const Line& line);
/// Same for M over S.group(), where E lies in S.
bool line_in_module_variety(const Module& M, const Line& line, const groups::Subgroup& S);

/// Conjugation sends u_alpha - 1 to u_{A alpha} - 1 modulo the square of the
/// radical, A = conj_matrix_on_E(g). Orbit and stabilizer are taken in
/// N_G(E); the orbit is sorted.
std::vector<Line> line_orbit(const Line& line);
groups::SubgroupPtr line_stabilizer(const Line& line);

/// A linear character of G, by its value on every element.
struct Character {
  GroupPtr group;
  FieldPtr field;
  std::vector<Scalar> values;

  Scalar operator()(Elem g) const { return values[g]; }
  std::uint64_t order() const;
  bool is_trivial() const;
};

Character trivial_character(const GroupPtr& G, const FieldPtr& F);

/// chi(g) with A_g alpha = chi(g) alpha. Requires E normal in G, the line
/// fixed by G and fp_independent; then the kernel is exactly C_G(E).
Character chi_from_line(const Line& line);

/// u = (1/m) sum_t chi(t)^-1 t (u_alpha - 1) t^-1 over a transversal of
/// C_G(E), m = |G : C_G(E)| prime to p. Asserts g u g^-1 = chi(g) u for all
/// g, u = u_alpha - 1 modulo Rad^2(kE), u^p = 0 and u not in Rad^2(kE).
ShiftedElem equivariant_lift(const Line& line, const Character& chi);

/// kK / kK u for u in kK: the quotient of the regular module by the left
/// ideal kK u, of dimension |K| / p.
Module cyclic_quotient_module(const AlgebraElem& u);

/// X_i = P_i / u P_i for the PIMs of block b. u P_i must be a submodule,
/// which holds when G conjugates u to multiples of itself. Each X_i is
/// checked to be indecomposable with simple top, nonprojective and in b.
std::vector<Module> xi_modules(const rep::GroupAlgebra& A, const blocks::BlockPartition& bp, const AlgebraElem& u,
                               std::size_t b);

/// Y_i affording chi^i; i may be negative.
Module character_module(const Character& chi, long i);

}  // namespace modrep::varieties
