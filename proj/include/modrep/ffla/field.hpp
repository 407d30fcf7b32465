#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace modrep::ffla {

/// A field element, encoded as the base-p integer whose digits are the
/// coefficients (little-endian) in the polynomial basis of the modulus.
/// 0 encodes zero and 1 encodes one.
using Scalar = std::uint32_t;

/// GF(p^n) with table-driven arithmetic.
///
/// Multiplication goes through discrete log / antilog tables with respect to
/// a fixed generator of the unit group. Addition is XOR in characteristic 2,
/// a lookup table for q <= 1024, and digitwise otherwise.
class Field {
 public:
  /// Smallest irreducible modulus (in base-p integer order) and the smallest
  /// primitive element. Requires p prime, n >= 1, p^n <= 2^20.
  static std::shared_ptr<const Field> make(std::uint32_t p, unsigned n);
  /// Same, with an explicit monic modulus given as n+1 little-endian coefficients.
  static std::shared_ptr<const Field> make(std::uint32_t p, unsigned n,
                                           const std::vector<std::uint32_t>& modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Scalar generator() const noexcept { return generator_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
  }
  Scalar neg(Scalar a) const noexcept { return p_ == 2 ? a : neg_table_[a]; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, long long e) const;

  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Scalar a) const noexcept { return log_[a]; }
  Scalar exp(long long k) const noexcept;
  /// Raw tables for inner loops: exp_table()[i] valid for i < 2(q-1).
  const std::uint32_t* log_table() const noexcept { return log_.data(); }
  const Scalar* exp_table() const noexcept { return exp_.data(); }

  /// Image of an integer in the prime subfield.
  Scalar from_int(long long v) const noexcept;
  std::vector<std::uint32_t> coefficients(Scalar a) const;
  Scalar from_coefficients(const std::vector<std::uint32_t>& c) const;

  std::uint64_t multiplicative_order(Scalar a) const;

  /// "0" or "g^k"; the unit prints as "g^0".
  std::string format(Scalar a) const;
  /// Accepts "0", "1", "g", "g^k" (k may be negative) and small integers
  /// (interpreted in the prime subfield).
  Scalar parse(std::string_view token) const;

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
  }

 private:
  Field(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);
  Scalar add_digits(Scalar a, Scalar b) const noexcept;

  std::uint32_t p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Scalar generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Scalar> exp_;
  std::vector<Scalar> add_table_;
  std::vector<Scalar> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Fields are compared by parameters, not by address.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// generator^((q-1)/m); throws InvalidArgument unless m | q-1.
Scalar root_of_unity(const Field& F, std::uint64_t m);

bool is_prime(std::uint64_t v);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace modrep::ffla
