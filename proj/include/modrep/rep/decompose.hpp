#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modrep/rep/hom.hpp"
#include "modrep/rep/module.hpp"

namespace modrep::rep {

struct Summand {
  Module module;
  std::size_t multiplicity = 0;
};

/// M = P_1 + ... + P_r with indecomposable P_i.
struct Decomposition {
  /// Indecomposable pieces, in the order of their basis columns.
  std::vector<Module> pieces;
  /// Columns of each piece in the coordinates of M.
  std::vector<Matrix> bases;
  /// Isomorphism classes among the pieces (first piece of each class).
  std::vector<Summand> summands;
  /// Class index of each piece.
  std::vector<std::size_t> class_of;
};

/// Fitting decomposition. A random endomorphism theta whose characteristic
/// polynomial has two coprime factors f, g splits M as ker f(theta)^N +
/// im f(theta)^N. A piece is a leaf once its endomorphism ring is certified
/// local. The re-summation is checked against M on every call.
Decomposition decompose_full(const Module& M, Search& search);
std::vector<Summand> decompose(const Module& M, Search& search);
/// Same, with a caller-supplied spanning set of End(M).
Decomposition decompose_with(const Module& M, const HomBasis& end, Search& search);

/// Number of re-summation checks passed so far in this process.
std::uint64_t resummation_checks() noexcept;

/// True when End(M) is local (certified, not sampled).
bool is_indecomposable(const Module& M, Search& search);

/// For indecomposable M and N: isomorphic iff some g f is invertible with
/// f, g running over bases of Hom(M, N) and Hom(N, M).
bool isomorphic_indecomposables(const Module& M, const Module& N);

/// Fast rejection on dimensions and Hom dimensions, then random invertible
/// homomorphisms, then comparison of decompositions.
bool are_isomorphic(const Module& M, const Module& N, Search& search);

/// Pieces of a decomposition that are not isomorphic to earlier ones, in
/// order, together with how often each occurs.
std::vector<Summand> group_isomorphic(const std::vector<Module>& indecomposables);

}  // namespace modrep::rep
