#pragma once

#include <random>
#include <vector>

#include "modrep/ffla/matrix.hpp"

namespace modrep::ffla {

/// Univariate polynomial, little-endian coefficients, no trailing zeros.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

void trim(Poly& f);
long degree(const Poly& f);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_monic(const Field& F, const Poly& a);
/// Monic gcd.
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& mod);
Scalar poly_eval(const Field& F, const Poly& f, Scalar x);

/// f(A) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& A);

/// Characteristic polynomial det(xI - A), via Hessenberg reduction.
Poly charpoly(const Matrix& A);

/// The distinct monic irreducible factors of f, sorted by degree and then by
/// coefficients from the top, so the result does not depend on rng. Uses
/// distinct-degree factorization followed by Cantor-Zassenhaus splitting.
std::vector<Poly> distinct_irreducible_factors(const Field& F, const Poly& f, std::mt19937_64& rng);

}  // namespace modrep::ffla
