#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modrep/ffla/matrix.hpp"

namespace modrep::ffla {

/// Incrementally built semi-echelon basis of a subspace of F^len.
///
/// Row i has a 1 at pivot(i) and zeros at the pivots of rows inserted before
/// it, so a vector is reduced by one pass over the rows in insertion order.
/// When tracking is enabled, every row also carries its expression in the
/// vectors passed to insert(), which lets callers rewrite a dependent vector
/// in terms of the original inputs.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t len, bool track = false)
      : field_(std::move(field)), len_(len), track_(track) {}

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return len_; }
  const FieldPtr& field() const noexcept { return field_; }

  /// Subtracts the span from v in place. Returns the coefficients, over the
  /// inserted vectors, of the removed part (empty unless tracking).
  Vector reduce(Vector& v) const;
  bool contains(Vector v) const;
  /// Adds v if independent; returns true when the span grew.
  bool insert(const Vector& v);
  /// When tracking: coefficients of v over the inserted vectors, or nullopt
  /// if v is not in the span.
  std::optional<Vector> express(Vector v) const;
  /// Inserted (independent) vectors, in order.
  const std::vector<Vector>& inserted() const noexcept { return originals_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  FieldPtr field_;
  std::size_t len_;
  bool track_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
  std::vector<Vector> originals_;
};

/// Basis (as a list) of the span of the given vectors, keeping the first
/// independent ones.
std::vector<Vector> independent_subset(const FieldPtr& field, std::size_t len, const std::vector<Vector>& vs);

}  // namespace modrep::ffla
