#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modrep/ffla/field.hpp"

namespace modrep::ffla {

using Vector = std::vector<Scalar>;

/// dst += a * src over F, elementwise on len entries.
inline void axpy(const Field& F, Scalar* dst, const Scalar* src, Scalar a, std::size_t len) {
  if (a == 0) return;
  const std::uint32_t la = F.log(a);
  const std::uint32_t* lg = F.log_table();
  const Scalar* ex = F.exp_table();
  if (F.characteristic() == 2) {
    for (std::size_t i = 0; i < len; ++i) {
      if (src[i]) dst[i] ^= ex[la + lg[src[i]]];
    }
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      if (src[i]) dst[i] = F.add(dst[i], ex[la + lg[src[i]]]);
    }
  }
}

/// v *= a elementwise.
inline void scale(const Field& F, Scalar* v, Scalar a, std::size_t len) {
  if (a == 1) return;
  for (std::size_t i = 0; i < len; ++i) v[i] = F.mul(v[i], a);
}

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols);
  /// 1x1 matrix.
  static Matrix scalar(FieldPtr field, Scalar s);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Scalar* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }
  Scalar* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  Vector column(std::size_t c) const;
  Vector row_vector(std::size_t r) const { return Vector(row(r), row(r) + cols_); }

  Matrix transpose() const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  /// Matrix times column vector.
  Vector apply(const Vector& v) const;
  /// Row vector times matrix.
  Vector apply_left(const Vector& v) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;

  bool operator==(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && same_field(field_, o.field_) && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const noexcept { return !(*this == o); }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  /// Invertible, with transform * A == reduced.
  Matrix transform;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot is the first nonzero entry at or
/// below the current row.
RrefResult rref(const Matrix& A);
std::size_t rank(const Matrix& A);
/// Some x with A x = b, or nullopt when inconsistent. Throws on shape mismatch.
std::optional<Vector> solve_linear(const Matrix& A, const Vector& b);
/// Basis of { x : A x = 0 }, cols - rank vectors.
std::vector<Vector> nullspace_basis(const Matrix& A);
/// Basis of the column space, as columns of the returned matrix.
Matrix column_space(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);
Matrix kron(const Matrix& A, const Matrix& B);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix block_diag(const Matrix& A, const Matrix& B);
Matrix power(const Matrix& A, std::uint64_t e);
/// A^k for k >= rows, i.e. the stable power used by Fitting's lemma.
Matrix stable_power(const Matrix& A);
bool is_nilpotent(const Matrix& A);
bool is_invertible(const Matrix& A);
Scalar trace(const Matrix& A);

/// "rows cols p n" followed by one line of generator-power tokens per row.
std::string dump(const Matrix& A);
Matrix parse_dump(const FieldPtr& field, const std::string& text);

}  // namespace modrep::ffla
