#include "modrep/rep/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"
#include "modrep/rep/meataxe.hpp"

namespace modrep::rep {

namespace {

bool is_trivial_module(const Module& S) {
  if (S.dim() != 1) return false;
  for (const auto& A : S.gen_mats()) {
    if (A(0, 0) != 1) return false;
  }
  return true;
}

std::vector<Scalar> generator_traces(const Module& S) {
  std::vector<Scalar> t;
  for (const auto& A : S.gen_mats()) t.push_back(ffla::trace(A));
  return t;
}

Matrix stack_rows(const FieldPtr& F, std::size_t cols, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& B : blocks) rows += B.rows();
  Matrix out(F, rows, cols);
  std::size_t off = 0;
  for (const auto& B : blocks) {
    out.set_block(off, 0, B);
    off += B.rows();
  }
  return out;
}

}  // namespace

HomBasis regular_endomorphisms(const Module& regular) {
  const auto& G = *regular.group();
  const std::size_t n = G.order();
  HomBasis out;
  for (Elem x = 0; x < n; ++x) {
    Matrix R(regular.field(), n, n);
    for (Elem h = 0; h < n; ++h) R(G.mul(h, x), h) = 1;
    out.push_back(std::move(R));
  }
  return out;
}

GroupAlgebra::GroupAlgebra(GroupPtr G, FieldPtr F, std::uint64_t seed, unsigned retries)
    : G_(std::move(G)), F_(std::move(F)), search_(seed, retries) {}

const Module& GroupAlgebra::regular() const {
  if (!regular_) regular_ = regular_module(G_, F_);
  return *regular_;
}

const Module& GroupAlgebra::trivial() const {
  if (!trivial_) trivial_ = trivial_module(G_, F_);
  return *trivial_;
}

Module GroupAlgebra::zero() const {
  return Module(G_, F_, std::vector<Matrix>(G_->gens().size(), Matrix(F_, 0, 0)), "0");
}

const groups::Subgroup& GroupAlgebra::sylow() const {
  if (!sylow_) sylow_ = groups::sylow(G_, characteristic());
  return *sylow_;
}

void GroupAlgebra::compute_simples() const {
  if (have_simples_) return;
  auto d = decompose_with(regular(), regular_endomorphisms(regular()), search_);
  std::vector<Module> pims;
  for (const auto& s : d.summands) pims.push_back(s.module);

  std::vector<Module> simples;
  for (const auto& P : pims) {
    for (const auto& S : composition_factors(P, search_)) {
      bool known = false;
      for (const auto& T : simples) {
        if (T.dim() == S.dim() && hom_dim(S, T) > 0) {
          known = true;
          break;
        }
      }
      if (!known) simples.push_back(S);
    }
  }
  if (simples.size() != pims.size()) throw AssertionFailure("number of simples differs from number of PIMs");

  std::vector<std::size_t> order(simples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial_module(simples[a]), tb = is_trivial_module(simples[b]);
    if (ta != tb) return ta;
    if (simples[a].dim() != simples[b].dim()) return simples[a].dim() < simples[b].dim();
    return generator_traces(simples[a]) < generator_traces(simples[b]);
  });
  for (auto i : order) {
    const Module& S = simples[i];
    const Module* cover = nullptr;
    for (const auto& P : pims) {
      if (hom_dim(P, S) > 0) {
        if (cover) throw AssertionFailure("simple module is the top of two PIMs");
        cover = &P;
      }
    }
    if (!cover) throw AssertionFailure("simple module without a projective cover");
    const std::size_t idx = simples_.size();
    simples_.push_back(S.relabeled("S" + std::to_string(idx)));
    pims_.push_back(cover->relabeled("P" + std::to_string(idx)));
    end_dims_.push_back(hom_dim(S, S));
  }
  have_simples_ = true;
}

const std::vector<Module>& GroupAlgebra::simples() const {
  compute_simples();
  return simples_;
}

const std::vector<Module>& GroupAlgebra::pims() const {
  compute_simples();
  return pims_;
}

const std::vector<std::size_t>& GroupAlgebra::simple_end_dims() const {
  compute_simples();
  return end_dims_;
}

bool GroupAlgebra::is_split() const {
  for (auto e : simple_end_dims()) {
    if (e != 1) return false;
  }
  return true;
}

std::size_t GroupAlgebra::simple_index(const Module& S) const {
  const auto& ss = simples();
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (ss[i].dim() == S.dim() && hom_dim(S, ss[i]) > 0) return i;
  }
  throw InvalidArgument("module is not isomorphic to a simple module");
}

std::vector<std::size_t> GroupAlgebra::composition_multiplicities(const Module& M) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pims().size(); ++i) out.push_back(hom_dim(pims_[i], M) / end_dims_[i]);
  return out;
}

std::vector<std::size_t> GroupAlgebra::top_multiplicities(const Module& M) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < simples().size(); ++i) out.push_back(hom_dim(M, simples_[i]) / end_dims_[i]);
  return out;
}

Matrix GroupAlgebra::radical(const Module& M) const {
  std::vector<Matrix> maps;
  for (const auto& S : simples()) {
    auto hb = hom_basis(M, S);
    maps.insert(maps.end(), hb.begin(), hb.end());
  }
  if (maps.empty()) return Matrix::identity(F_, M.dim());
  Matrix stacked = stack_rows(F_, M.dim(), maps);
  return Matrix::from_columns(F_, M.dim(), ffla::nullspace_basis(stacked));
}

Matrix GroupAlgebra::socle(const Module& M) const {
  ffla::EchelonBasis eb(F_, M.dim());
  std::vector<Vector> cols;
  for (const auto& S : simples()) {
    for (const auto& f : hom_basis(S, M)) {
      for (std::size_t c = 0; c < f.cols(); ++c) {
        Vector v = f.column(c);
        if (eb.insert(v)) cols.push_back(std::move(v));
      }
    }
  }
  return Matrix::from_columns(F_, M.dim(), cols);
}

Module GroupAlgebra::top(const Module& M) const { return quotient(M, radical(M)); }

bool GroupAlgebra::is_projective(const Module& M) const {
  const auto& P = sylow();
  const std::size_t order = P.order();
  if (M.dim() % order != 0) return false;
  if (M.dim() == 0) return true;
  Matrix norm(F_, M.dim(), M.dim());
  for (auto x : P.elements()) norm = norm + M.mat(x);
  return ffla::rank(norm) * order == M.dim();
}

ProjectiveCover GroupAlgebra::projective_cover(const Module& M) const {
  if (M.dim() == 0) return {zero(), Matrix(F_, 0, 0)};
  const auto mult = top_multiplicities(M);
  std::vector<Module> parts;
  std::vector<HomBasis> homs;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    auto hb = hom_basis(pims_[i], M);
    for (std::size_t c = 0; c < mult[i]; ++c) {
      parts.push_back(pims_[i]);
      homs.push_back(hb);
    }
  }
  Module cover = direct_sum(parts, G_, F_);
  for (unsigned attempt = 0; attempt < search_.retries; ++attempt) {
    Matrix f(F_, M.dim(), 0);
    for (const auto& hb : homs) f = ffla::hstack(f, random_combination(hb, search_));
    if (ffla::rank(f) == M.dim()) return {cover, f};
  }
  throw SearchExhausted("projective_cover: no surjection found", search_.seed);
}

Module GroupAlgebra::omega(const Module& M) const {
  if (M.dim() == 0) return zero();
  auto pc = projective_cover(M);
  auto ker = ffla::nullspace_basis(pc.surjection);
  if (ker.empty()) return zero();
  return submodule(pc.cover, Matrix::from_columns(F_, pc.cover.dim(), ker));
}

Module GroupAlgebra::omega_inv(const Module& M) const { return dual(omega(dual(M))); }

Module GroupAlgebra::omega_power(const Module& M, int t) const {
  if (t == 0) return projective_free_part(M);
  Module cur = M;
  for (int i = 0; i < std::abs(t); ++i) cur = t > 0 ? omega(cur) : omega_inv(cur);
  return cur;
}

Module GroupAlgebra::projective_free_part(const Module& M) const {
  if (M.dim() == 0) return M;
  auto d = decompose_full(M, search_);
  std::vector<Module> keep;
  for (const auto& P : d.pieces) {
    if (!is_projective(P)) keep.push_back(P);
  }
  return direct_sum(keep, G_, F_);
}

HomBasis GroupAlgebra::phom_basis(const Module& M, const Module& N) const {
  require_compatible(M, N, "phom_basis");
  const std::size_t m = M.dim(), n = N.dim();
  HomBasis out;
  if (m == 0 || n == 0) return out;
  const std::size_t order = G_->order();
  const ffla::Field& K = *F_;
  ffla::EchelonBasis eb(F_, n * m);
  for (const auto& gen : module_generators(N)) {
    // A(:, g) = rho_N(g) n
    std::vector<Vector> a(order);
    for (Elem g = 0; g < order; ++g) a[g] = N.mat(g).apply(gen);
    for (std::size_t t = 0; t < m; ++t) {
      Matrix T(F_, n, m);
      for (Elem g = 0; g < order; ++g) {
        const Scalar* row = M.mat(G_->inv(g)).row(t);
        for (std::size_t r = 0; r < n; ++r) {
          if (a[g][r]) ffla::axpy(K, T.row(r), row, a[g][r], m);
        }
      }
      if (eb.insert(T.data())) out.push_back(std::move(T));
    }
  }
  return out;
}

std::size_t GroupAlgebra::phom_dim(const Module& M, const Module& N) const { return phom_basis(M, N).size(); }

std::size_t GroupAlgebra::stable_hom_dim(const Module& M, const Module& N) const {
  const std::size_t h = hom_dim(M, N);
  if (h == 0) return 0;
  return h - phom_dim(M, N);
}

}  // namespace modrep::rep
