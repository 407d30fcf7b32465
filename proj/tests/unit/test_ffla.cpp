#include <doctest.h>

#include <random>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"
#include "modrep/ffla/field.hpp"
#include "modrep/ffla/matrix.hpp"
#include "modrep/ffla/polynomial.hpp"

using namespace modrep;
using namespace modrep::ffla;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, F->order() - 1);
  Matrix A(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = d(rng);
  return A;
}

// Plain Gaussian elimination determinant, independent of rref().
Scalar det_oracle(Matrix A) {
  const Field& K = A.F();
  const std::size_t n = A.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !A(p, c)) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      det = K.neg(det);
    }
    det = K.mul(det, A(c, c));
    const Scalar inv = K.inv(A(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar f = K.mul(A(r, c), inv);
      for (std::size_t j = c; j < n; ++j) A(r, j) = K.sub(A(r, j), K.mul(f, A(c, j)));
    }
  }
  return det;
}

bool irreducible_by_trial(const Field& K, const Poly& f) {
  const long d = degree(f);
  // enumerate monic polynomials of degree 1..d/2
  for (long e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (long i = 0; i < e; ++i) count *= K.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(e + 1, 0);
      g[e] = 1;
      std::uint64_t v = idx;
      for (long i = 0; i < e; ++i) {
        g[i] = static_cast<Scalar>(v % K.order());
        v /= K.order();
      }
      if (poly_mod(K, f, g).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field construction and small examples") {
  auto F8 = Field::make(2, 3);
  CHECK(F8->order() == 8);
  CHECK(F8->multiplicative_order(F8->generator()) == 7);
  Scalar zeta = root_of_unity(*F8, 7);
  CHECK(zeta != 1);
  CHECK(F8->pow(zeta, 7) == 1);

  auto F2 = Field::make(2, 1);
  CHECK(F2->add(1, 1) == 0);

  auto F64 = Field::make(2, 6);
  bool has7 = false, has3 = false;
  for (long long k = 0; k < 63; ++k) {
    auto o = F64->multiplicative_order(F64->exp(k));
    has7 |= (o == 7);
    has3 |= (o == 3);
  }
  CHECK(has7);
  CHECK(has3);
  Scalar w = root_of_unity(*F64, 3);
  CHECK(F64->add(F64->add(F64->mul(w, w), w), 1) == 0);
  CHECK(root_of_unity(*F64, 1) == 1);

  CHECK_THROWS_AS(root_of_unity(*F8, 3), InvalidArgument);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 0), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 21), InvalidArgument);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  const std::pair<std::uint32_t, unsigned> params[] = {{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 2}, {3, 3}, {5, 2}};
  for (auto [p, n] : params) {
    auto F = Field::make(p, n);
    const Scalar q = F->order();
    CAPTURE(q);
    CHECK(F->multiplicative_order(F->generator()) == q - 1);
    for (Scalar a = 0; a < q; ++a) {
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (Scalar b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (Scalar c = 0; c < q; c += (q > 16 ? 5 : 1)) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("big field addition and format round trip") {
  auto F = Field::make(3, 8);  // q = 6561, digitwise addition
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Scalar> d(0, F->order() - 1);
  for (int i = 0; i < 500; ++i) {
    Scalar a = d(rng), b = d(rng), c = d(rng);
    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    CHECK(F->parse(F->format(a)) == a);
  }
  CHECK(F->format(0) == "0");
  CHECK(F->format(1) == "g^0");
  CHECK(F->parse("g^-1") == F->inv(F->generator()));
}

TEST_CASE("rref, rank, solve and nullspace") {
  auto F2 = Field::make(2, 1);
  auto I = Matrix::identity(F2, 4);
  auto r = rref(I);
  CHECK(r.reduced == I);
  CHECK(r.rank == 4);
  CHECK(r.transform == I);
  CHECK(rank(Matrix(F2, 3, 5)) == 0);
  auto ones = Matrix::from_rows(F2, {{1, 1}, {1, 1}});
  CHECK(rank(ones) == 1);
  auto ns = nullspace_basis(Matrix::from_rows(F2, {{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{1, 1});
  CHECK(nullspace_basis(I).empty());
  CHECK(nullspace_basis(Matrix(F2, 2, 3)).size() == 3);
  CHECK(!solve_linear(Matrix(F2, 2, 2), Vector{1, 0}).has_value());
  CHECK(*solve_linear(I, Vector{1, 0, 1, 1}) == Vector{1, 0, 1, 1});

  std::mt19937_64 rng(7);
  for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 3}, {3, 4}, {5, 2}, {2, 6}}) {
    auto F = Field::make(p, n);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
      Matrix A = random_matrix(F, rows, cols, rng);
      if (trial % 3 == 0) {
        rows = 1;
        A = A.block(0, 0, 1, cols);
      }
      auto R = rref(A);
      CHECK(R.transform * A == R.reduced);
      CHECK(is_invertible(R.transform));
      CHECK(rref(R.reduced).reduced == R.reduced);
      CHECK(rank(A) == rank(A.transpose()));
      Matrix x0 = random_matrix(F, cols, 1, rng);
      Vector b = A.apply(x0.column(0));
      auto x = solve_linear(A, b);
      REQUIRE(x.has_value());
      CHECK(A.apply(*x) == b);
      auto N = nullspace_basis(A);
      CHECK(N.size() == cols - R.rank);
      for (auto& v : N) CHECK(A.apply(v) == Vector(rows, 0));
      // x - x0 lies in the nullspace span
      Vector diff(cols);
      for (std::size_t i = 0; i < cols; ++i) diff[i] = F->sub((*x)[i], x0(i, 0));
      EchelonBasis eb(F, cols);
      for (auto& v : N) eb.insert(v);
      CHECK(eb.contains(diff));
    }
  }
}

TEST_CASE("kron") {
  auto F = Field::make(3, 2);
  CHECK(kron(Matrix::identity(F, 2), Matrix::identity(F, 3)) == Matrix::identity(F, 6));
  std::mt19937_64 rng(3);
  Matrix B = random_matrix(F, 2, 3, rng);
  CHECK(kron(Matrix::scalar(F, 5), B) == B.scaled(5));
  Matrix A = random_matrix(F, 2, 2, rng), C = random_matrix(F, 2, 2, rng);
  Matrix K = kron(A, C);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(K(i, j) == F->mul(A(i / 2, j / 2), C(i % 2, j % 2)));
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(F, 2, 3, rng), b = random_matrix(F, 3, 2, rng);
    Matrix c = random_matrix(F, 3, 4, rng), d = random_matrix(F, 2, 2, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("echelon basis tracking") {
  auto F = Field::make(5, 1);
  std::mt19937_64 rng(11);
  EchelonBasis eb(F, 5, true);
  std::vector<Vector> in;
  for (int i = 0; i < 3; ++i) {
    Vector v = random_matrix(F, 1, 5, rng).row_vector(0);
    if (eb.insert(v)) in.push_back(v);
  }
  Vector target(5, 0);
  std::vector<Scalar> c = {2, 3, 4};
  for (std::size_t i = 0; i < in.size(); ++i) axpy(*F, target.data(), in[i].data(), c[i], 5);
  auto got = eb.express(target);
  REQUIRE(got.has_value());
  for (std::size_t i = 0; i < in.size(); ++i) CHECK((*got)[i] == c[i]);
}

TEST_CASE("charpoly agrees with determinant of xI - A") {
  std::mt19937_64 rng(5);
  for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 4}, {3, 2}, {7, 1}, {2, 6}}) {
    auto F = Field::make(p, n);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t sz = 1 + rng() % 6;
      Matrix A = random_matrix(F, sz, sz, rng);
      if (trial % 2) {
        for (std::size_t i = 0; i < sz; ++i) A(i, 0) = 0;  // exercise zero subdiagonal
      }
      Poly f = charpoly(A);
      CHECK(degree(f) == static_cast<long>(sz));
      CHECK(evaluate(f, A).is_zero());
      for (Scalar t = 0; t < F->order(); ++t) {
        Matrix tI = Matrix::identity(F, sz).scaled(t);
        CHECK(det_oracle(tI - A) == poly_eval(*F, f, t));
      }
    }
  }
}

TEST_CASE("distinct irreducible factors") {
  std::mt19937_64 rng(9);
  for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 1}, {2, 3}, {3, 1}, {5, 1}, {3, 2}}) {
    auto F = Field::make(p, n);
    for (int trial = 0; trial < 15; ++trial) {
      Poly f{1};
      std::size_t parts = 1 + rng() % 4;
      for (std::size_t i = 0; i < parts; ++i) {
        Poly g = random_matrix(F, 1, 1 + rng() % 4, rng).row_vector(0);
        g.push_back(1);
        f = poly_mul(*F, f, g);
        if (rng() % 3 == 0) f = poly_mul(*F, f, g);
      }
      auto fac = distinct_irreducible_factors(*F, f, rng);
      Poly prod{1};
      for (auto& g : fac) {
        CHECK(g.back() == 1);
        CHECK(irreducible_by_trial(*F, g));
        CHECK(poly_mod(*F, f, g).empty());
        prod = poly_mul(*F, prod, g);
      }
      for (std::size_t i = 0; i < fac.size(); ++i)
        for (std::size_t j = i + 1; j < fac.size(); ++j) CHECK(fac[i] != fac[j]);
      // every root-free part of f is covered: f divides prod^deg f
      Poly acc{1};
      for (long k = 0; k < degree(f); ++k) acc = poly_mul(*F, acc, prod);
      CHECK(poly_mod(*F, acc, f).empty());
    }
  }
}

TEST_CASE("matrix dump round trip") {
  auto F = Field::make(2, 3);
  std::mt19937_64 rng(2);
  Matrix A = random_matrix(F, 3, 4, rng);
  CHECK(parse_dump(F, dump(A)) == A);
}
