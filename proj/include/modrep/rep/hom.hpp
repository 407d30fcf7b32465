#pragma once

#include <vector>

#include "modrep/rep/module.hpp"

namespace modrep::rep {

/// Basis of Hom(M, N): dim N x dim M matrices T with T rho_M(g) = rho_N(g) T.
using HomBasis = std::vector<Matrix>;

/// Spins M from standard basis vectors; a homomorphism is fixed by the images
/// of the seeds, and every linear dependency met while spinning becomes a
/// constraint on those images.
HomBasis hom_basis(const Module& M, const Module& N);
std::size_t hom_dim(const Module& M, const Module& N);

/// Same for modules over an algebra given by generator matrices, which need
/// not be invertible. gens_M and gens_N correspond index by index.
HomBasis hom_basis(const FieldPtr& F, std::size_t dim_M, const std::vector<Matrix>& gens_M, std::size_t dim_N,
                   const std::vector<Matrix>& gens_N);

/// Standard basis vectors that generate M, chosen greedily in index order.
std::vector<Vector> module_generators(const Module& M);

/// Random element of the span of a basis.
Matrix random_combination(const HomBasis& basis, Search& search);

}  // namespace modrep::rep
