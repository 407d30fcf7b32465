#include "modrep/rep/hom.hpp"

#include <functional>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"

namespace modrep::rep {

namespace {

struct Node {
  std::size_t seed;
  std::size_t parent;  // == index for seeds
  std::size_t gen;
  Elem elem;  // group element with b = rho(elem) e_seed, when tracked
};

struct Relation {
  std::size_t node;
  std::size_t gen;
  Vector coeffs;  // over the nodes inserted so far
};

struct SpinTree {
  std::vector<Node> nodes;
  std::vector<Vector> vectors;
  std::vector<Relation> relations;
  std::vector<std::size_t> seed_index;  // standard basis index of each seed
};

SpinTree spin_tree(const FieldPtr& F, std::size_t m, const std::vector<Matrix>& gens,
                   const std::function<Elem(std::size_t, Elem)>& step) {
  SpinTree t;
  ffla::EchelonBasis eb(F, m, true);
  for (std::size_t s = 0; s < m && t.vectors.size() < m; ++s) {
    Vector e(m, 0);
    e[s] = 1;
    if (!eb.insert(e)) continue;
    const std::size_t seed = t.seed_index.size();
    t.seed_index.push_back(s);
    t.nodes.push_back({seed, t.nodes.size(), 0, 0});
    t.vectors.push_back(std::move(e));
    for (std::size_t head = t.nodes.size() - 1; head < t.nodes.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Vector v = gens[g].apply(t.vectors[head]);
        Vector probe = v;
        Vector coeff = eb.reduce(probe);
        bool zero = true;
        for (auto x : probe) {
          if (x) {
            zero = false;
            break;
          }
        }
        if (zero) {
          t.relations.push_back({head, g, std::move(coeff)});
        } else {
          eb.insert(v);
          t.nodes.push_back({seed, head, g, step(g, t.nodes[head].elem)});
          t.vectors.push_back(std::move(v));
        }
      }
    }
  }
  return t;
}

// Phi(j) gives the n x n matrix with T b_j = Phi(j) u_seed(j); PhiStep(j, g)
// gives the matrix for gens[g] b_j.
HomBasis solve_homs(const FieldPtr& F, std::size_t m, std::size_t n, const SpinTree& t,
                    const std::function<const Matrix&(std::size_t)>& phi,
                    const std::function<Matrix(std::size_t, std::size_t)>& phi_step,
                    const std::function<bool(const Relation&)>& trivial) {
  const std::size_t k = t.seed_index.size();
  const std::size_t width = n * k;
  if (n == 0 || m == 0) return {};
  const ffla::Field& K = *F;
  ffla::EchelonBasis constraints(F, width);
  for (const auto& rel : t.relations) {
    if (constraints.size() == width) break;
    if (trivial(rel)) continue;
    Matrix C(F, n, width);
    const Matrix lead = phi_step(rel.node, rel.gen);
    C.set_block(0, t.nodes[rel.node].seed * n, lead);
    for (std::size_t i = 0; i < rel.coeffs.size(); ++i) {
      const Scalar c = rel.coeffs[i];
      if (!c) continue;
      const Matrix& P = phi(i);
      const std::size_t off = t.nodes[i].seed * n;
      const Scalar nc = K.neg(c);
      for (std::size_t r = 0; r < n; ++r) ffla::axpy(K, C.row(r) + off, P.row(r), nc, n);
    }
    for (std::size_t r = 0; r < n && constraints.size() < width; ++r) constraints.insert(C.row_vector(r));
  }
  std::vector<Vector> solutions;
  if (constraints.size() == 0) {
    for (std::size_t i = 0; i < width; ++i) {
      Vector e(width, 0);
      e[i] = 1;
      solutions.push_back(std::move(e));
    }
  } else if (constraints.size() < width) {
    Matrix A(F, constraints.size(), width);
    for (std::size_t r = 0; r < constraints.size(); ++r) {
      const auto& row = constraints.inserted()[r];
      std::copy(row.begin(), row.end(), A.row(r));
    }
    solutions = ffla::nullspace_basis(A);
  }
  if (solutions.empty()) return {};

  Matrix B = Matrix::from_columns(F, m, t.vectors);
  Matrix Binv = *ffla::inverse(B);
  HomBasis out;
  for (const auto& U : solutions) {
    Matrix TB(F, n, m);
    for (std::size_t j = 0; j < t.nodes.size(); ++j) {
      const std::size_t off = t.nodes[j].seed * n;
      Vector u(U.begin() + static_cast<long>(off), U.begin() + static_cast<long>(off + n));
      Vector img = phi(j).apply(u);
      for (std::size_t r = 0; r < n; ++r) TB(r, j) = img[r];
    }
    out.push_back(TB * Binv);
  }
  return out;
}

}  // namespace

HomBasis hom_basis(const Module& M, const Module& N) {
  require_compatible(M, N, "hom_basis");
  const auto& G = *M.group();
  const FieldPtr& F = M.field();
  const std::size_t m = M.dim(), n = N.dim();
  if (m == 0 || n == 0) return {};
  SpinTree t = spin_tree(F, m, M.gen_mats(), [&G](std::size_t g, Elem e) { return G.mul(G.gens()[g], e); });
  auto phi = [&](std::size_t j) -> const Matrix& { return N.mat(t.nodes[j].elem); };
  auto phi_step = [&](std::size_t j, std::size_t g) { return N.mat(G.mul(G.gens()[g], t.nodes[j].elem)); };
  auto trivial = [&](const Relation& rel) {
    // gens[g] b_j is itself a spun vector b_i = rho(elem_i) e_seed.
    const Elem target = G.mul(G.gens()[rel.gen], t.nodes[rel.node].elem);
    std::size_t hit = rel.coeffs.size();
    for (std::size_t i = 0; i < rel.coeffs.size(); ++i) {
      if (!rel.coeffs[i]) continue;
      if (hit != rel.coeffs.size() || rel.coeffs[i] != 1) return false;
      hit = i;
    }
    return hit != rel.coeffs.size() && t.nodes[hit].elem == target && t.nodes[hit].seed == t.nodes[rel.node].seed;
  };
  return solve_homs(F, m, n, t, phi, phi_step, trivial);
}

std::size_t hom_dim(const Module& M, const Module& N) { return hom_basis(M, N).size(); }

HomBasis hom_basis(const FieldPtr& F, std::size_t dim_M, const std::vector<Matrix>& gens_M, std::size_t dim_N,
                   const std::vector<Matrix>& gens_N) {
  if (gens_M.size() != gens_N.size()) throw InvalidArgument("hom_basis: generator lists differ in length");
  if (dim_M == 0 || dim_N == 0) return {};
  SpinTree t = spin_tree(F, dim_M, gens_M, [](std::size_t, Elem) { return Elem{0}; });
  std::vector<Matrix> phis;
  phis.reserve(t.nodes.size());
  for (std::size_t j = 0; j < t.nodes.size(); ++j) {
    const auto& nd = t.nodes[j];
    if (nd.parent == j) {
      phis.push_back(Matrix::identity(F, dim_N));
    } else {
      phis.push_back(gens_N[nd.gen] * phis[nd.parent]);
    }
  }
  auto phi = [&](std::size_t j) -> const Matrix& { return phis[j]; };
  auto phi_step = [&](std::size_t j, std::size_t g) { return gens_N[g] * phis[j]; };
  auto trivial = [](const Relation&) { return false; };
  return solve_homs(F, dim_M, dim_N, t, phi, phi_step, trivial);
}

std::vector<Vector> module_generators(const Module& M) {
  const std::size_t m = M.dim();
  ffla::EchelonBasis eb(M.field(), m);
  std::vector<Vector> seeds;
  std::vector<Vector> queue;
  for (std::size_t s = 0; s < m && eb.size() < m; ++s) {
    Vector e(m, 0);
    e[s] = 1;
    if (!eb.insert(e)) continue;
    seeds.push_back(e);
    queue.assign(1, e);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& A : M.gen_mats()) {
        Vector w = A.apply(queue[head]);
        if (eb.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return seeds;
}

Matrix random_combination(const HomBasis& basis, Search& search) {
  if (basis.empty()) throw InvalidArgument("random_combination of an empty basis");
  const ffla::Field& K = basis[0].F();
  Matrix acc(basis[0].field(), basis[0].rows(), basis[0].cols());
  for (const auto& B : basis) {
    const Scalar c = search.scalar(K);
    if (!c) continue;
    for (std::size_t r = 0; r < acc.rows(); ++r) ffla::axpy(K, acc.row(r), B.row(r), c, acc.cols());
  }
  return acc;
}

}  // namespace modrep::rep
