#include "modrep/rep/module.hpp"

#include <mutex>
#include <sstream>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"

namespace modrep::rep {

struct Module::Impl {
  GroupPtr G;
  FieldPtr F;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::string label;
  std::shared_ptr<std::mutex> lock = std::make_shared<std::mutex>();
  std::shared_ptr<std::vector<std::unique_ptr<Matrix>>> cache;
};

Module::Module(GroupPtr G, FieldPtr F, std::vector<Matrix> gen_mats, std::string label) {
  if (!G || !F) throw InvalidArgument("module needs a group and a field");
  if (gen_mats.size() != G->gens().size()) throw InvalidArgument("one matrix per group generator is required");
  std::size_t d = 0;
  if (!gen_mats.empty()) d = gen_mats[0].rows();
  for (const auto& A : gen_mats) {
    if (A.rows() != d || A.cols() != d) throw InvalidArgument("generator matrices must be square of equal size");
    if (!ffla::same_field(A.field(), F)) throw InvalidArgument("generator matrix over a different field");
  }
  impl_ = std::make_shared<Impl>();
  impl_->G = std::move(G);
  impl_->F = std::move(F);
  impl_->dim = d;
  impl_->gens = std::move(gen_mats);
  impl_->label = std::move(label);
  impl_->cache = std::make_shared<std::vector<std::unique_ptr<Matrix>>>(impl_->G->order());
}

const GroupPtr& Module::group() const noexcept { return impl_->G; }
const FieldPtr& Module::field() const noexcept { return impl_->F; }
std::size_t Module::dim() const noexcept { return impl_->dim; }
const std::vector<Matrix>& Module::gen_mats() const noexcept { return impl_->gens; }
const std::string& Module::label() const noexcept { return impl_->label; }

Module Module::relabeled(std::string label) const {
  Module m;
  m.impl_ = std::make_shared<Impl>(Impl{impl_->G, impl_->F, impl_->dim, impl_->gens, std::move(label), impl_->lock,
                                        impl_->cache});
  return m;
}

const Matrix& Module::mat(Elem g) const {
  const auto& G = *impl_->G;
  if (g >= G.order()) throw InvalidArgument("group element out of range");
  std::lock_guard<std::mutex> guard(*impl_->lock);
  auto& cache = *impl_->cache;
  if (!cache[0]) cache[0] = std::make_unique<Matrix>(Matrix::identity(impl_->F, impl_->dim));
  std::vector<Elem> chain;
  for (Elem e = g; !cache[e]; e = G.parent(e)) chain.push_back(e);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Elem e = *it;
    cache[e] = std::make_unique<Matrix>(impl_->gens[G.via(e)] * *cache[G.parent(e)]);
  }
  return *cache[g];
}

Matrix Module::algebra_element(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != impl_->G->order()) throw InvalidArgument("group algebra element has the wrong length");
  Matrix acc(impl_->F, impl_->dim, impl_->dim);
  const auto& F = *impl_->F;
  for (Elem g = 0; g < coeffs.size(); ++g) {
    if (!coeffs[g]) continue;
    const Matrix& A = mat(g);
    for (std::size_t r = 0; r < impl_->dim; ++r) ffla::axpy(F, acc.row(r), A.row(r), coeffs[g], impl_->dim);
  }
  return acc;
}

void Module::validate(bool exhaustive, Search* search) const {
  for (const auto& A : impl_->gens) {
    if (!ffla::is_invertible(A)) throw InvalidArgument("generator matrix is not invertible");
  }
  const auto& G = *impl_->G;
  auto check = [&](std::size_t s, Elem e) {
    if (impl_->gens[s] * mat(e) != mat(G.mul(G.gens()[s], e)))
      throw InvalidArgument("generator matrices violate a group relation");
  };
  if (exhaustive || !search) {
    for (Elem e = 0; e < G.order(); ++e)
      for (std::size_t s = 0; s < G.gens().size(); ++s) check(s, e);
    return;
  }
  if (G.gens().empty()) return;
  for (int i = 0; i < 16; ++i) check(search->rng() % G.gens().size(), static_cast<Elem>(search->rng() % G.order()));
}

std::string Module::dump() const {
  std::ostringstream os;
  const auto& F = *impl_->F;
  const std::string tag = impl_->G->name().empty() ? "G" + std::to_string(impl_->G->order()) : impl_->G->name();
  os << impl_->dim << ' ' << F.characteristic() << ' ' << F.degree() << ' ' << tag << '\n';
  for (const auto& A : impl_->gens) os << ffla::dump(A);
  return os.str();
}

bool same_group(const Module& M, const Module& N) { return M.group() == N.group(); }

void require_compatible(const Module& M, const Module& N, const char* what) {
  if (!same_group(M, N)) throw InvalidArgument(std::string(what) + ": modules over different groups");
  if (!ffla::same_field(M.field(), N.field())) throw InvalidArgument(std::string(what) + ": modules over different fields");
}

Module trivial_module(const GroupPtr& G, const FieldPtr& F) {
  return Module(G, F, std::vector<Matrix>(G->gens().size(), Matrix::identity(F, 1)), "k");
}

Module regular_module(const GroupPtr& G, const FieldPtr& F) {
  const std::size_t n = G->order();
  std::vector<Matrix> mats;
  for (auto s : G->gens()) {
    Matrix A(F, n, n);
    for (Elem h = 0; h < n; ++h) A(G->mul(s, h), h) = 1;
    mats.push_back(std::move(A));
  }
  return Module(G, F, std::move(mats), "kG");
}

Module character_module(const GroupPtr& G, const FieldPtr& F, const std::vector<Scalar>& gen_values) {
  std::vector<Matrix> mats;
  for (auto v : gen_values) mats.push_back(Matrix::scalar(F, v));
  return Module(G, F, std::move(mats));
}

Module direct_sum(const Module& M, const Module& N) {
  require_compatible(M, N, "direct_sum");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < M.gen_mats().size(); ++i) mats.push_back(ffla::block_diag(M.gen_mats()[i], N.gen_mats()[i]));
  return Module(M.group(), M.field(), std::move(mats));
}

Module direct_sum(const std::vector<Module>& parts, const GroupPtr& G, const FieldPtr& F) {
  std::size_t d = 0;
  for (const auto& P : parts) {
    if (P.group() != G || !ffla::same_field(P.field(), F)) throw InvalidArgument("direct_sum: incompatible summand");
    d += P.dim();
  }
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < G->gens().size(); ++i) {
    Matrix A(F, d, d);
    std::size_t off = 0;
    for (const auto& P : parts) {
      A.set_block(off, off, P.gen_mats()[i]);
      off += P.dim();
    }
    mats.push_back(std::move(A));
  }
  return Module(G, F, std::move(mats));
}

Module tensor(const Module& M, const Module& N) {
  require_compatible(M, N, "tensor");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < M.gen_mats().size(); ++i) mats.push_back(ffla::kron(M.gen_mats()[i], N.gen_mats()[i]));
  return Module(M.group(), M.field(), std::move(mats));
}

Module dual(const Module& M) {
  const auto& G = *M.group();
  std::vector<Matrix> mats;
  for (auto s : G.gens()) mats.push_back(M.mat(G.inv(s)).transpose());
  return Module(M.group(), M.field(), std::move(mats));
}

Module restrict(const Module& M, const groups::Subgroup& S) {
  if (S.parent() != M.group()) throw InvalidArgument("restrict: subgroup of a different group");
  std::vector<Matrix> mats;
  for (auto h : S.group()->gens()) mats.push_back(M.mat(S.to_parent(h)));
  return Module(S.group(), M.field(), std::move(mats));
}

Module induce(const Module& M, const groups::Subgroup& S) {
  if (M.group() != S.group()) throw InvalidArgument("induce: module is not over the subgroup");
  const auto& G = *S.parent();
  const std::size_t d = M.dim(), idx = S.index();
  std::vector<Matrix> mats;
  for (auto g : G.gens()) {
    Matrix A(M.field(), d * idx, d * idx);
    for (std::size_t j = 0; j < idx; ++j) {
      // g t_j = t_k s
      const Elem x = G.mul(g, S.transversal()[j]);
      A.set_block(S.coset_of(x) * d, j * d, M.mat(S.coset_part(x)));
    }
    mats.push_back(std::move(A));
  }
  return Module(S.parent(), M.field(), std::move(mats));
}

Module change_basis(const Module& M, const Matrix& P) {
  auto Pinv = ffla::inverse(P);
  if (!Pinv) throw InvalidArgument("change_basis: matrix is not invertible");
  std::vector<Matrix> mats;
  for (const auto& A : M.gen_mats()) mats.push_back(*Pinv * A * P);
  return Module(M.group(), M.field(), std::move(mats));
}

Matrix spin(const Module& M, const std::vector<Vector>& seeds) {
  ffla::EchelonBasis eb(M.field(), M.dim());
  std::vector<Vector> queue;
  for (const auto& v : seeds) {
    if (eb.insert(v)) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& A : M.gen_mats()) {
      Vector w = A.apply(queue[head]);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Matrix::from_columns(M.field(), M.dim(), queue);
}

Matrix complete_basis(const Matrix& basis) {
  const std::size_t d = basis.rows();
  ffla::EchelonBasis eb(basis.field(), d);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Vector v = basis.column(c);
    if (!eb.insert(v)) throw InvalidArgument("complete_basis: columns are dependent");
    cols.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
    Vector e(d, 0);
    e[i] = 1;
    if (eb.insert(e)) cols.push_back(std::move(e));
  }
  return Matrix::from_columns(basis.field(), d, cols);
}

namespace {

// Blocks of P^-1 rho P for P = [basis | complement].
Module piece(const Module& M, const Matrix& basis, bool sub) {
  const std::size_t d = M.dim(), k = basis.cols();
  const std::size_t off = sub ? 0 : k, len = sub ? k : d - k;
  if (basis.rows() != d) throw InvalidArgument("subspace basis has the wrong length");
  Matrix P = complete_basis(basis);
  Matrix Pinv = *ffla::inverse(P);
  std::vector<Matrix> mats;
  for (const auto& A : M.gen_mats()) {
    Matrix B = Pinv * A * P;
    if (!B.block(k, 0, d - k, k).is_zero()) throw InvalidArgument("subspace is not invariant");
    mats.push_back(B.block(off, off, len, len));
  }
  return Module(M.group(), M.field(), std::move(mats));
}

}  // namespace

Module submodule(const Module& M, const Matrix& basis) { return piece(M, basis, true); }

Module quotient(const Module& M, const Matrix& basis) { return piece(M, basis, false); }

}  // namespace modrep::rep
