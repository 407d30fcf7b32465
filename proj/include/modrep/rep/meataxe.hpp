#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "modrep/rep/module.hpp"

namespace modrep::rep {

/// An algebra acting on F^dim through generator matrices, with a sampler of
/// random algebra elements.
struct Action {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::function<Matrix(Search&)> random_element;
};

/// Group action: random elements are combinations of element matrices.
Action action_of(const Module& M);
/// Algebra spanned by the given matrices (closed under products, containing
/// the identity): random elements are combinations of the spanning set.
Action action_of_algebra(const FieldPtr& F, std::size_t dim, std::vector<Matrix> spanning);

/// Basis (columns) of the subspace spanned by the seeds under the generators.
Matrix spin(const Action& A, const std::vector<Vector>& seeds);

/// A proper nonzero invariant subspace, or nullopt when the action is
/// irreducible. Irreducibility is certified by Norton's test: for an
/// irreducible factor f of the characteristic polynomial of a random algebra
/// element theta, every nonzero vector of ker f(theta) and of ker f(theta)^T
/// must spin to the whole space (one vector each suffices when the nullity
/// equals deg f). Throws SearchExhausted when no certificate is found.
std::optional<Matrix> proper_submodule(const Action& A, Search& search);

/// The actions on an invariant subspace and on the quotient.
Action sub_action(const Action& A, const Matrix& basis);
Action quotient_action(const Action& A, const Matrix& basis);
/// Composition factors of an algebra action, bottom to top.
std::vector<Action> composition_factors(const Action& A, Search& search);

bool is_irreducible(const Module& M, Search& search);
/// Composition factors, bottom to top of one composition series.
std::vector<Module> composition_factors(const Module& M, Search& search);

}  // namespace modrep::rep
