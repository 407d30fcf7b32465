#include "modrep/rep/decompose.hpp"

#include <atomic>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"
#include "modrep/ffla/polynomial.hpp"
#include "modrep/rep/meataxe.hpp"

namespace modrep::rep {

namespace {

std::atomic<std::uint64_t> resummations{0};

Vector flatten(const Matrix& A) { return A.data(); }

// Keeps an independent spanning subset.
std::vector<Matrix> independent_matrices(const std::vector<Matrix>& ms) {
  if (ms.empty()) return {};
  ffla::EchelonBasis eb(ms[0].field(), ms[0].rows() * ms[0].cols());
  std::vector<Matrix> out;
  for (const auto& m : ms) {
    if (eb.insert(flatten(m))) out.push_back(m);
  }
  return out;
}

// Subalgebra generated by the N_i is nilpotent: the chain W_{k+1} = sum N_i W_k
// reaches 0.
bool generates_nilpotent_algebra(const FieldPtr& F, std::size_t d, const std::vector<Matrix>& Ns) {
  std::vector<Vector> W;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d, 0);
    e[i] = 1;
    W.push_back(std::move(e));
  }
  while (!W.empty()) {
    ffla::EchelonBasis eb(F, d);
    std::vector<Vector> next;
    for (const auto& N : Ns)
      for (const auto& w : W) {
        Vector v = N.apply(w);
        if (eb.insert(v)) next.push_back(std::move(v));
      }
    if (next.size() == W.size()) return false;
    W = std::move(next);
  }
  return true;
}

enum class Verdict { Local, Split, Unknown };

// End(M) is local iff all composition factors of M as an End(M)-module are
// isomorphic to one S with dim End(S) = dim S.
bool local_by_composition(const Module& M, const std::vector<Matrix>& end, Search& search) {
  Action A = action_of_algebra(M.field(), M.dim(), end);
  auto factors = composition_factors(A, search);
  const Action& S = factors[0];
  if (hom_basis(S.field, S.dim, S.gens, S.dim, S.gens).size() != S.dim) return false;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const Action& T = factors[i];
    if (T.dim != S.dim || hom_basis(S.field, S.dim, S.gens, T.dim, T.gens).empty()) return false;
  }
  return true;
}

struct Splitter {
  Matrix theta;
  ffla::Poly f;
};

// Certifies locality of End(M) or finds an endomorphism that splits M.
Verdict examine(const Module& M, const std::vector<Matrix>& end, Search& search, Splitter& out) {
  const ffla::Field& K = *M.field();
  if (end.size() <= 1) return Verdict::Local;
  bool all_linear = true;
  std::vector<Matrix> nilparts;
  for (const auto& E : end) {
    auto fac = ffla::distinct_irreducible_factors(K, ffla::charpoly(E), search.rng);
    if (fac.size() >= 2) {
      out = {E, fac[0]};
      return Verdict::Split;
    }
    if (ffla::degree(fac[0]) > 1) {
      all_linear = false;
      continue;
    }
    const Scalar lambda = K.neg(fac[0][0]);
    Matrix Nm = E;
    for (std::size_t i = 0; i < M.dim(); ++i) Nm(i, i) = K.sub(Nm(i, i), lambda);
    nilparts.push_back(std::move(Nm));
  }
  if (all_linear) {
    if (generates_nilpotent_algebra(M.field(), M.dim(), nilparts)) return Verdict::Local;
  } else if (local_by_composition(M, end, search)) {
    return Verdict::Local;
  }
  for (unsigned attempt = 0; attempt < search.retries; ++attempt) {
    Matrix theta = random_combination(end, search);
    auto fac = ffla::distinct_irreducible_factors(K, ffla::charpoly(theta), search.rng);
    if (fac.size() >= 2) {
      out = {theta, fac[0]};
      return Verdict::Split;
    }
  }
  return Verdict::Unknown;
}

void split_recursive(const Module& M, const Matrix& coords, const std::vector<Matrix>& end, Search& search,
                     Decomposition& out) {
  Splitter sp;
  const Verdict v = examine(M, end, search, sp);
  if (v == Verdict::Local) {
    out.pieces.push_back(M);
    out.bases.push_back(coords);
    return;
  }
  if (v == Verdict::Unknown) throw SearchExhausted("decompose: no splitting endomorphism found", search.seed);
  Matrix phi = ffla::stable_power(ffla::evaluate(sp.f, sp.theta));
  Matrix Kb = Matrix::from_columns(M.field(), M.dim(), ffla::nullspace_basis(phi));
  Matrix Ib = ffla::column_space(phi);
  Matrix Q = ffla::hstack(Kb, Ib);
  auto Qinv = ffla::inverse(Q);
  if (!Qinv) throw AssertionFailure("decompose: Fitting pieces do not span");
  const std::size_t k = Kb.cols();
  const std::pair<std::size_t, std::size_t> parts[2] = {{0, k}, {k, M.dim() - k}};
  const Matrix* bases[2] = {&Kb, &Ib};
  for (int p = 0; p < 2; ++p) {
    const auto [off, len] = parts[p];
    std::vector<Matrix> sub_end;
    for (const auto& E : end) sub_end.push_back((*Qinv * E * Q).block(off, off, len, len));
    Module piece = submodule(M, *bases[p]);
    split_recursive(piece, coords * *bases[p], independent_matrices(sub_end), search, out);
  }
}

void verify_resummation(const Module& M, const Decomposition& d) {
  Matrix P(M.field(), M.dim(), 0);
  for (const auto& B : d.bases) P = ffla::hstack(P, B);
  auto Pinv = ffla::inverse(P);
  if (!Pinv) throw AssertionFailure("decompose: pieces do not span the module");
  for (std::size_t g = 0; g < M.gen_mats().size(); ++g) {
    Matrix B = *Pinv * M.gen_mats()[g] * P;
    Matrix D(M.field(), M.dim(), M.dim());
    std::size_t off = 0;
    for (const auto& piece : d.pieces) {
      D.set_block(off, off, piece.gen_mats()[g]);
      off += piece.dim();
    }
    if (B != D) throw AssertionFailure("decompose: re-summation is not an isomorphism");
  }
  ++resummations;
}

}  // namespace

std::uint64_t resummation_checks() noexcept { return resummations.load(); }

std::vector<Summand> group_isomorphic(const std::vector<Module>& indecomposables) {
  std::vector<Summand> out;
  for (const auto& P : indecomposables) {
    bool found = false;
    for (auto& s : out) {
      if (isomorphic_indecomposables(s.module, P)) {
        ++s.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({P, 1});
  }
  return out;
}

Decomposition decompose_full(const Module& M, Search& search) {
  if (M.dim() == 0) return {};
  return decompose_with(M, hom_basis(M, M), search);
}

Decomposition decompose_with(const Module& M, const HomBasis& end, Search& search) {
  Decomposition d;
  if (M.dim() == 0) return d;
  split_recursive(M, Matrix::identity(M.field(), M.dim()), independent_matrices(end), search, d);
  verify_resummation(M, d);
  for (const auto& P : d.pieces) {
    std::size_t cls = d.summands.size();
    for (std::size_t c = 0; c < d.summands.size(); ++c) {
      if (isomorphic_indecomposables(d.summands[c].module, P)) {
        cls = c;
        break;
      }
    }
    if (cls == d.summands.size()) d.summands.push_back({P, 0});
    ++d.summands[cls].multiplicity;
    d.class_of.push_back(cls);
  }
  return d;
}

std::vector<Summand> decompose(const Module& M, Search& search) { return decompose_full(M, search).summands; }

bool is_indecomposable(const Module& M, Search& search) {
  if (M.dim() == 0) return false;
  Splitter sp;
  const Verdict v = examine(M, hom_basis(M, M), search, sp);
  if (v == Verdict::Unknown) throw SearchExhausted("is_indecomposable: inconclusive", search.seed);
  return v == Verdict::Local;
}

bool isomorphic_indecomposables(const Module& M, const Module& N) {
  require_compatible(M, N, "isomorphic_indecomposables");
  if (M.dim() != N.dim()) return false;
  if (M.dim() == 0) return true;
  auto F = hom_basis(M, N);
  if (F.empty()) return false;
  auto G = hom_basis(N, M);
  for (const auto& g : G)
    for (const auto& f : F) {
      if (ffla::is_invertible(g * f)) return true;
    }
  return false;
}

bool are_isomorphic(const Module& M, const Module& N, Search& search) {
  require_compatible(M, N, "are_isomorphic");
  if (M.dim() != N.dim()) return false;
  if (M.dim() == 0) return true;
  auto H = hom_basis(M, N);
  if (H.empty()) return false;
  const std::size_t end_m = hom_dim(M, M);
  if (H.size() != end_m || hom_dim(N, N) != end_m || hom_dim(N, M) != end_m) return false;
  for (unsigned i = 0; i < std::min(search.retries, 16u); ++i) {
    if (ffla::is_invertible(random_combination(H, search))) return true;
  }
  auto dm = decompose_full(M, search);
  auto dn = decompose_full(N, search);
  std::vector<bool> used(dn.pieces.size(), false);
  for (const auto& P : dm.pieces) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.pieces.size(); ++j) {
      if (used[j] || !isomorphic_indecomposables(P, dn.pieces[j])) continue;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace modrep::rep
