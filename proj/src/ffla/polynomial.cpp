#include "modrep/ffla/polynomial.hpp"

#include <algorithm>

#include "modrep/error.hpp"

namespace modrep::ffla {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) axpy(F, r.data() + i, b.data(), a[i], b.size());
  trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quo(rem.size() - b.size() + 1, 0);
  const Scalar lead_inv = F.inv(b.back());
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    const Scalar c = F.mul(rem[k], lead_inv);
    const std::size_t shift = k + 1 - b.size();
    quo[shift] = c;
    if (c) axpy(F, rem.data() + shift, b.data(), F.neg(c), b.size());
    if (k == b.size() - 1) break;
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(quo);
  return {quo, rem};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  Poly r = a;
  scale(F, r.data(), F.inv(r.back()), r.size());
  return r;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result{1};
  result = poly_mod(F, result, mod);
  Poly b = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, b), mod);
    e >>= 1;
    if (e) b = poly_mod(F, poly_mul(F, b, b), mod);
  }
  return result;
}

Scalar poly_eval(const Field& F, const Poly& f, Scalar x) {
  Scalar acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

Matrix evaluate(const Poly& f, const Matrix& A) {
  if (!A.is_square()) throw InvalidArgument("evaluate: non-square matrix");
  const Field& F = A.F();
  Matrix acc(A.field(), A.rows(), A.cols());
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * A;
    if (f[i]) {
      for (std::size_t d = 0; d < A.rows(); ++d) acc(d, d) = F.add(acc(d, d), f[i]);
    }
  }
  return acc;
}

Poly charpoly(const Matrix& A) {
  if (!A.is_square()) throw InvalidArgument("charpoly: non-square matrix");
  const Field& F = A.F();
  const std::size_t n = A.rows();
  Matrix H = A;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i) {
      if (H(i, m - 1)) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != m) {
      std::swap_ranges(H.row(piv), H.row(piv) + n, H.row(m));
      for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, m));
    }
    const Scalar t_inv = F.inv(H(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const Scalar u = F.mul(H(i, m - 1), t_inv);
      if (!u) continue;
      axpy(F, H.row(i), H.row(m), F.neg(u), n);
      for (std::size_t r = 0; r < n; ++r) {
        if (H(r, i)) H(r, m) = F.add(H(r, m), F.mul(u, H(r, i)));
      }
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1..m} h_{j,j-1}) p_{m-i-1}
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = poly_mul(F, Poly{F.neg(H(m - 1, m - 1)), 1}, p[m - 1]);
    Scalar t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, H(m - i, m - i - 1));
      if (!t) break;
      const Scalar c = F.mul(t, H(m - i - 1, m - 1));
      if (!c) continue;
      Poly term = p[m - i - 1];
      scale(F, term.data(), c, term.size());
      cur = poly_sub(F, cur, term);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

namespace {

Poly random_poly(const Field& F, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
  Poly r(len);
  for (auto& c : r) c = dist(rng);
  trim(r);
  return r;
}

// Splits a squarefree g whose irreducible factors all have degree d.
void equal_degree_split(const Field& F, const Poly& g, long d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) <= d) {
    out.push_back(poly_monic(F, g));
    return;
  }
  const std::uint64_t q = F.order();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Poly a = random_poly(F, g.size() - 1, rng);
    if (degree(a) < 1) continue;
    Poly b;
    if (F.characteristic() == 2) {
      // absolute trace to GF(2): a + a^2 + ... + a^(2^(n d - 1))
      const long steps = static_cast<long>(F.degree()) * d;
      Poly t = a;
      b = a;
      for (long i = 1; i < steps; ++i) {
        t = poly_mod(F, poly_mul(F, t, t), g);
        b = poly_add(F, b, t);
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly acc = poly_mod(F, a, g);
      Poly norm = acc;
      for (long i = 1; i < d; ++i) {
        acc = poly_powmod(F, acc, q, g);
        norm = poly_mod(F, poly_mul(F, norm, acc), g);
      }
      b = poly_powmod(F, norm, (q - 1) / 2, g);
      b = poly_sub(F, b, Poly{1});
    }
    Poly h = poly_gcd(F, g, b);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, poly_divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
  throw AssertionFailure("equal-degree factorization did not split");
}

}  // namespace

std::vector<Poly> distinct_irreducible_factors(const Field& F, const Poly& f_in, std::mt19937_64& rng) {
  Poly c = poly_monic(F, f_in);
  std::vector<Poly> out;
  if (degree(c) < 1) return out;
  const Poly x{0, 1};
  Poly h = poly_mod(F, x, c);
  for (long d = 1; degree(c) > 0; ++d) {
    h = poly_powmod(F, h, F.order(), c);
    Poly g = poly_gcd(F, c, poly_sub(F, h, x));
    if (degree(g) > 0) {
      std::vector<Poly> part;
      equal_degree_split(F, g, d, rng, part);
      std::sort(part.begin(), part.end(), [](const Poly& a, const Poly& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
      });
      out.insert(out.end(), part.begin(), part.end());
      for (;;) {
        Poly t = poly_gcd(F, c, g);
        if (degree(t) < 1) break;
        c = poly_divmod(F, c, t).first;
      }
      if (degree(c) > 0) h = poly_mod(F, h, c);
    }
  }
  return out;
}

}  // namespace modrep::ffla
