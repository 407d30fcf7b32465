#include "modrep/ffla/field.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "modrep/error.hpp"

namespace modrep::ffla {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

using Digits = std::vector<std::uint32_t>;

// Polynomials over GF(p) as little-endian digit vectors, used only while the
// tables do not exist yet.
void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

bool divides_monic(const Digits& d, const Digits& f, std::uint32_t p) {
  return poly_mod(f, d, p).empty();
}

Digits digits_of(std::uint64_t v, std::uint32_t p, unsigned n) {
  Digits d(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_irreducible(const Digits& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t k = 0; k < count; ++k) {
      Digits g = digits_of(k, p, d);
      g.push_back(1);
      if (divides_monic(g, f, p)) return false;
    }
  }
  return true;
}

Scalar encode(const Digits& d, std::uint32_t p) {
  Scalar v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("field extension degree must be positive");
  if (ipow(p, n) > kMaxOrder) throw InvalidArgument("field order exceeds 2^20");
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t k = 0; k < count; ++k) {
    Digits f = digits_of(k, p, n);
    f.push_back(1);
    if (is_irreducible(f, p)) return std::shared_ptr<const Field>(new Field(p, n, std::move(f)));
  }
  throw AssertionFailure("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, unsigned n,
                                         const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("field extension degree must be positive");
  if (ipow(p, n) > kMaxOrder) throw InvalidArgument("field order exceeds 2^20");
  if (modulus.size() != n + 1 || modulus.back() != 1) {
    throw InvalidArgument("modulus must be monic with n+1 coefficients");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus is reducible");
  return std::shared_ptr<const Field>(new Field(p, n, modulus));
}

Field::Field(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(static_cast<std::uint32_t>(ipow(p, n))), modulus_(std::move(modulus)) {
  const std::uint64_t units = q_ - 1;
  const auto primes = prime_factors(units);
  auto power = [&](const Digits& a, std::uint64_t e) {
    Digits r{1};
    Digits b = a;
    while (e) {
      if (e & 1) r = poly_mulmod(r, b, modulus_, p_);
      b = poly_mulmod(b, b, modulus_, p_);
      e >>= 1;
    }
    return r;
  };
  Digits gen;
  if (q_ == 2) {
    gen = {1};
  } else {
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      Digits a = digits_of(cand, p_, n_);
      trim(a);
      bool primitive = true;
      for (auto r : primes) {
        if (power(a, units / r) == Digits{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = a;
        break;
      }
    }
  }
  generator_ = encode(gen, p_);

  log_.assign(q_, 0);
  exp_.assign(2 * units, 0);
  Digits cur{1};
  for (std::uint64_t i = 0; i < units; ++i) {
    const Scalar v = encode(cur, p_);
    exp_[i] = v;
    exp_[i + units] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, gen, modulus_, p_);
  }

  if (p_ != 2) {
    neg_table_.resize(q_);
    for (Scalar a = 0; a < q_; ++a) {
      Scalar r = 0;
      Scalar mult = 1;
      Scalar x = a;
      for (unsigned i = 0; i < n_; ++i) {
        const Scalar d = x % p_;
        r += ((p_ - d) % p_) * mult;
        x /= p_;
        mult *= p_;
      }
      neg_table_[a] = r;
    }
    if (q_ <= 1024) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Scalar a = 0; a < q_; ++a) {
        for (Scalar b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
      }
    }
  }
}

Scalar Field::add_digits(Scalar a, Scalar b) const noexcept {
  Scalar r = 0;
  Scalar mult = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t units = q_ - 1;
  return exp_[(units - log_[a]) % units];
}

Scalar Field::exp(long long k) const noexcept {
  const long long units = q_ - 1;
  long long r = k % units;
  if (r < 0) r += units;
  return exp_[static_cast<std::size_t>(r)];
}

Scalar Field::pow(Scalar a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw InvalidArgument("negative power of zero");
    return 0;
  }
  const long long units = q_ - 1;
  long long k = static_cast<long long>(log_[a]) * (e % units) % units;
  return exp(k);
}

Scalar Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

std::vector<std::uint32_t> Field::coefficients(Scalar a) const { return digits_of(a, p_, n_); }

Scalar Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > n_) throw InvalidArgument("too many coefficients");
  for (auto d : c) {
    if (d >= p_) throw InvalidArgument("coefficient out of range");
  }
  return encode(c, p_);
}

std::uint64_t Field::multiplicative_order(Scalar a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  const std::uint64_t units = q_ - 1;
  std::uint64_t ord = units;
  for (auto r : prime_factors(units)) {
    while (ord % r == 0 && pow(a, static_cast<long long>(ord / r)) == 1) ord /= r;
  }
  return ord;
}

std::string Field::format(Scalar a) const {
  if (a == 0) return "0";
  return "g^" + std::to_string(log_[a]);
}

Scalar Field::parse(std::string_view token) const {
  auto trim_ws = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  token = trim_ws(token);
  if (token.empty()) throw InvalidArgument("empty scalar token");
  if (token == "g") return generator_;
  if (token.size() >= 2 && token[0] == 'g' && token[1] == '^') {
    long long k = 0;
    auto body = token.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw InvalidArgument("bad scalar token '" + std::string(token) + "'");
    }
    return exp(k);
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidArgument("bad scalar token '" + std::string(token) + "'");
  }
  return from_int(v);
}

Scalar root_of_unity(const Field& F, std::uint64_t m) {
  const std::uint64_t units = F.order() - 1;
  if (m == 0 || units % m != 0) {
    throw InvalidArgument("GF(" + std::to_string(F.order()) + ") has no primitive " + std::to_string(m) +
                          "-th root of unity");
  }
  return F.exp(static_cast<long long>(units / m));
}

}  // namespace modrep::ffla
