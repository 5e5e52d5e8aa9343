#include "solvlie/matrix.hpp"

#include <sstream>
#include <utility>

#include "solvlie/error.hpp"

namespace solvlie {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged row in matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<QVector> QMatrix::row_list() const {
  std::vector<QVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const QMatrix& m) {
  RrefResult out{m, 0, {}};
  QMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(pivot_row, j));
    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(r, j) -= f * a(pivot_row, j);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> nullspace_basis(const QMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1)
    throw Error(ErrorCode::InvalidParameter, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

QVector solve(const QMatrix& m, const QVector& b) {
  const QMatrix inv = inverse(m);
  QVector x(m.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) x[i] += inv(i, j) * b[j];
  return x;
}

QVector row_times(std::span<const Rational> v, const QMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector/matrix size mismatch");
  QVector out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix diagonal_matrix(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace solvlie

namespace solvlie {

std::optional<QVector> particular_solution(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult r = rref(aug);
  QVector x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    const std::size_t pc = r.pivot_columns[i];
    if (pc == m.cols()) return std::nullopt;
    x[pc] = r.reduced(i, m.cols());
  }
  return x;
}

}  // namespace solvlie
