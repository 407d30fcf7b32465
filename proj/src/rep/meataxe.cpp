#include "modrep/rep/meataxe.hpp"

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"
#include "modrep/ffla/polynomial.hpp"

namespace modrep::rep {

namespace {

constexpr std::size_t kMaxEnumeratedPoints = 4096;
constexpr std::size_t kSampledElements = 8;

Matrix combine(const FieldPtr& F, std::size_t dim, const std::vector<const Matrix*>& parts, Search& search) {
  const ffla::Field& K = *F;
  Matrix acc(F, dim, dim);
  for (const Matrix* P : parts) {
    const Scalar c = search.scalar(K);
    if (!c) continue;
    for (std::size_t r = 0; r < dim; ++r) ffla::axpy(K, acc.row(r), P->row(r), c, dim);
  }
  return acc;
}

Matrix spin_with(const FieldPtr& F, std::size_t dim, const std::vector<Matrix>& gens, const std::vector<Vector>& seeds) {
  ffla::EchelonBasis eb(F, dim);
  std::vector<Vector> queue;
  for (const auto& v : seeds) {
    if (eb.insert(v)) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size() && queue.size() < dim; ++head) {
    for (const auto& A : gens) {
      Vector w = A.apply(queue[head]);
      if (eb.insert(w)) {
        queue.push_back(std::move(w));
        if (queue.size() == dim) break;
      }
    }
  }
  return Matrix::from_columns(F, dim, queue);
}

// Columns x with y^T x = 0 for every column y of W.
Matrix annihilator(const FieldPtr& F, std::size_t dim, const Matrix& W) {
  auto ns = ffla::nullspace_basis(W.transpose());
  return Matrix::from_columns(F, dim, ns);
}

// Every vector of span(basis) up to scalars, first nonzero coordinate 1.
template <class Visit>
bool for_each_point(const ffla::Field& K, const std::vector<Vector>& basis, Visit visit) {
  const std::size_t d = basis.size();
  const std::size_t len = basis[0].size();
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<Scalar> c(d, 0);
    c[lead] = 1;
    // enumerate the tail coordinates lead+1..d-1
    for (;;) {
      Vector v(len, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (c[i]) ffla::axpy(K, v.data(), basis[i].data(), c[i], len);
      }
      if (visit(v)) return true;
      std::size_t i = lead + 1;
      while (i < d && c[i] + 1 == K.order()) c[i++] = 0;
      if (i >= d) break;
      ++c[i];
    }
  }
  return false;
}

std::size_t point_count(std::uint64_t q, std::size_t d) {
  std::size_t total = 0, pw = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += pw;
    if (total > kMaxEnumeratedPoints) return kMaxEnumeratedPoints + 1;
    pw *= q;
  }
  return total;
}

Action transported(const Action& A, const Matrix& basis, bool sub) {
  const std::size_t d = A.dim, k = basis.cols();
  const std::size_t off = sub ? 0 : k, len = sub ? k : d - k;
  Matrix P = complete_basis(basis);
  Matrix Pinv = *ffla::inverse(P);
  Action out;
  out.field = A.field;
  out.dim = len;
  for (const auto& g : A.gens) out.gens.push_back((Pinv * g * P).block(off, off, len, len));
  auto parent = A.random_element;
  out.random_element = [parent, P, Pinv, off, len](Search& s) { return (Pinv * parent(s) * P).block(off, off, len, len); };
  return out;
}

}  // namespace

Action action_of(const Module& M) {
  Action a;
  a.field = M.field();
  a.dim = M.dim();
  a.gens = M.gen_mats();
  a.random_element = [M](Search& s) {
    const auto n = M.group()->order();
    std::vector<const Matrix*> parts;
    for (std::size_t i = 0; i < std::min<std::size_t>(n, kSampledElements); ++i) parts.push_back(&M.mat(static_cast<Elem>(s.rng() % n)));
    return combine(M.field(), M.dim(), parts, s);
  };
  return a;
}

Action action_of_algebra(const FieldPtr& F, std::size_t dim, std::vector<Matrix> spanning) {
  Action a;
  a.field = F;
  a.dim = dim;
  a.gens = spanning;
  a.random_element = [F, dim, spanning = std::move(spanning)](Search& s) {
    std::vector<const Matrix*> parts;
    for (const auto& m : spanning) parts.push_back(&m);
    return combine(F, dim, parts, s);
  };
  return a;
}

Matrix spin(const Action& A, const std::vector<Vector>& seeds) { return spin_with(A.field, A.dim, A.gens, seeds); }

std::optional<Matrix> proper_submodule(const Action& A, Search& search) {
  const std::size_t d = A.dim;
  if (d <= 1) return std::nullopt;
  const ffla::Field& K = *A.field;
  std::vector<Matrix> gens_t;
  for (const auto& g : A.gens) gens_t.push_back(g.transpose());

  for (unsigned attempt = 0; attempt < search.retries; ++attempt) {
    Matrix theta = A.random_element(search);
    auto factors = ffla::distinct_irreducible_factors(K, ffla::charpoly(theta), search.rng);
    for (const auto& f : factors) {
      const auto deg = static_cast<std::size_t>(ffla::degree(f));
      if (deg > 4 && d > 12) break;  // factors are sorted by degree
      Matrix ft = ffla::evaluate(f, theta);
      auto null = ffla::nullspace_basis(ft);
      Matrix W = spin_with(A.field, d, A.gens, {null[0]});
      if (W.cols() < d) return W;
      auto null_t = ffla::nullspace_basis(ft.transpose());
      Matrix Wt = spin_with(A.field, d, gens_t, {null_t[0]});
      if (Wt.cols() < d) return annihilator(A.field, d, Wt);
      if (null.size() == deg) return std::nullopt;  // Norton's criterion
      if (point_count(K.order(), null.size()) > kMaxEnumeratedPoints) continue;
      std::optional<Matrix> found;
      for_each_point(K, null, [&](const Vector& v) {
        Matrix S = spin_with(A.field, d, A.gens, {v});
        if (S.cols() < d) found = S;
        return found.has_value();
      });
      if (found) return found;
      for_each_point(K, null_t, [&](const Vector& v) {
        Matrix S = spin_with(A.field, d, gens_t, {v});
        if (S.cols() < d) found = annihilator(A.field, d, S);
        return found.has_value();
      });
      if (found) return found;
      return std::nullopt;
    }
  }
  throw SearchExhausted("no submodule or irreducibility certificate found", search.seed);
}

Action sub_action(const Action& A, const Matrix& basis) { return transported(A, basis, true); }

Action quotient_action(const Action& A, const Matrix& basis) { return transported(A, basis, false); }

std::vector<Action> composition_factors(const Action& A, Search& search) {
  if (A.dim == 0) return {};
  auto W = proper_submodule(A, search);
  if (!W) return {A};
  auto lower = composition_factors(sub_action(A, *W), search);
  auto upper = composition_factors(quotient_action(A, *W), search);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

bool is_irreducible(const Module& M, Search& search) {
  if (M.dim() == 0) return false;
  return !proper_submodule(action_of(M), search).has_value();
}

std::vector<Module> composition_factors(const Module& M, Search& search) {
  if (M.dim() == 0) return {};
  auto W = proper_submodule(action_of(M), search);
  if (!W) return {M};
  auto lower = composition_factors(submodule(M, *W), search);
  auto upper = composition_factors(quotient(M, *W), search);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace modrep::rep
