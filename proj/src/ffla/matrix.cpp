#include "modrep/ffla/matrix.hpp"

#include <sstream>

#include "modrep/error.hpp"

namespace modrep::ffla {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!same_field(a.field(), b.field())) throw InvalidArgument(std::string(op) + ": matrices over different fields");
}

}  // namespace

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InvalidArgument("ragged rows");
    for (std::size_t c = 0; c < nc; ++c) {
      if (rows[r][c] >= m.F().order()) throw InvalidArgument("entry outside the field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::scalar(FieldPtr field, Scalar s) {
  Matrix m(std::move(field), 1, 1);
  m(0, 0) = s;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_) {
    if (v) return false;
  }
  return true;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o, "multiply");
  if (cols_ != o.rows_) throw InvalidArgument("multiply: shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  const Field& K = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar* dst = out.row(i);
    const Scalar* a = row(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (a[j]) axpy(K, dst, o.row(j), a[j], o.cols_);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("add: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o, "subtract");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("subtract: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  scale(*field_, out.data_.data(), s, out.data_.size());
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InvalidArgument("apply: shape mismatch");
  Vector out(rows_, 0);
  const Field& K = *field_;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    const Scalar* a = row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (a[c] && v[c]) acc = K.add(acc, K.mul(a[c], v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Vector Matrix::apply_left(const Vector& v) const {
  if (v.size() != rows_) throw InvalidArgument("apply_left: shape mismatch");
  Vector out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) axpy(*field_, out.data(), row(r), v[r], cols_);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InvalidArgument("set_block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
  }
  return out;
}

namespace {

// In-place reduction; optionally applies the same row operations to *T.
std::vector<std::size_t> reduce_in_place(Matrix& A, Matrix* T) {
  const Field& K = A.F();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t tc = T ? T->cols() : 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t piv = A.rows();
    for (std::size_t i = r; i < A.rows(); ++i) {
      if (A(i, c)) {
        piv = i;
        break;
      }
    }
    if (piv == A.rows()) continue;
    if (piv != r) {
      std::swap_ranges(A.row(piv), A.row(piv) + A.cols(), A.row(r));
      if (T) std::swap_ranges(T->row(piv), T->row(piv) + tc, T->row(r));
    }
    const Scalar inv = K.inv(A(r, c));
    scale(K, A.row(r) + c, inv, A.cols() - c);
    if (T) scale(K, T->row(r), inv, tc);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c) == 0) continue;
      const Scalar f = K.neg(A(i, c));
      axpy(K, A.row(i) + c, A.row(r) + c, f, A.cols() - c);
      if (T) axpy(K, T->row(i), T->row(r), f, tc);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& A) {
  RrefResult out;
  out.reduced = A;
  out.transform = Matrix::identity(A.field(), A.rows());
  out.pivots = reduce_in_place(out.reduced, &out.transform);
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& A) {
  Matrix work = A;
  return reduce_in_place(work, nullptr).size();
}

std::optional<Vector> solve_linear(const Matrix& A, const Vector& b) {
  if (b.size() != A.rows()) throw InvalidArgument("solve_linear: shape mismatch");
  Matrix aug(A.field(), A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug(r, c) = A(r, c);
    aug(r, A.cols()) = b[r];
  }
  const auto pivots = reduce_in_place(aug, nullptr);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vector x(A.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, A.cols());
  return x;
}

std::vector<Vector> nullspace_basis(const Matrix& A) {
  Matrix R = A;
  const auto pivots = reduce_in_place(R, nullptr);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  const Field& K = A.F();
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(A.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = K.neg(R(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix column_space(const Matrix& A) {
  Matrix R = A;
  const auto pivots = reduce_in_place(R, nullptr);
  return A.select_columns(pivots);
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (!A.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix R = A;
  Matrix T = Matrix::identity(A.field(), A.rows());
  const auto pivots = reduce_in_place(R, &T);
  if (pivots.size() != A.rows()) return std::nullopt;
  return T;
}

Matrix kron(const Matrix& A, const Matrix& B) {
  require_same_field(A, B, "kron");
  const Field& K = A.F();
  Matrix out(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Scalar a = A(i, j);
      if (!a) continue;
      for (std::size_t k = 0; k < B.rows(); ++k) {
        for (std::size_t l = 0; l < B.cols(); ++l) out(i * B.rows() + k, j * B.cols() + l) = K.mul(a, B(k, l));
      }
    }
  }
  return out;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw InvalidArgument("hstack: row mismatch");
  Matrix out(A.field() ? A.field() : B.field(), A.rows(), A.cols() + B.cols());
  out.set_block(0, 0, A);
  out.set_block(0, A.cols(), B);
  return out;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) throw InvalidArgument("vstack: column mismatch");
  Matrix out(A.field() ? A.field() : B.field(), A.rows() + B.rows(), A.cols());
  out.set_block(0, 0, A);
  out.set_block(A.rows(), 0, B);
  return out;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  Matrix out(A.field() ? A.field() : B.field(), A.rows() + B.rows(), A.cols() + B.cols());
  out.set_block(0, 0, A);
  out.set_block(A.rows(), A.cols(), B);
  return out;
}

Matrix power(const Matrix& A, std::uint64_t e) {
  if (!A.is_square()) throw InvalidArgument("power of a non-square matrix");
  Matrix result = Matrix::identity(A.field(), A.rows());
  Matrix base = A;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix stable_power(const Matrix& A) {
  if (!A.is_square()) throw InvalidArgument("stable_power of a non-square matrix");
  Matrix cur = A;
  std::size_t exponent = 1;
  while (exponent < A.rows()) {
    cur = cur * cur;
    exponent *= 2;
  }
  return cur;
}

bool is_nilpotent(const Matrix& A) { return A.rows() == 0 || stable_power(A).is_zero(); }

bool is_invertible(const Matrix& A) { return A.is_square() && rank(A) == A.rows(); }

Scalar trace(const Matrix& A) {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) t = A.F().add(t, A(i, i));
  return t;
}

std::string dump(const Matrix& A) {
  std::ostringstream os;
  os << A.rows() << ' ' << A.cols() << ' ' << A.F().characteristic() << ' ' << A.F().degree() << '\n';
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (c) os << ' ';
      os << A.F().format(A(r, c));
    }
    os << '\n';
  }
  return os.str();
}

Matrix parse_dump(const FieldPtr& field, const std::string& text) {
  std::istringstream is(text);
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 0;
  unsigned n = 0;
  if (!(is >> rows >> cols >> p >> n)) throw InvalidArgument("matrix dump: bad header");
  if (p != field->characteristic() || n != field->degree()) throw InvalidArgument("matrix dump: field mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::string tok;
      if (!(is >> tok)) throw InvalidArgument("matrix dump: truncated");
      m(r, c) = field->parse(tok);
    }
  }
  return m;
}

}  // namespace modrep::ffla
