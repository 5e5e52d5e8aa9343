#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solvlie/rational.hpp"

namespace solvlie {

using QVector = std::vector<Rational>;

// Dense row-major matrix over Q. Everything in this library is at most
// (n+2)x(n+2) or a few hundred rows for constraint systems, so no sparse
// storage.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  std::vector<QVector> row_list() const;
  std::span<const Rational> entries() const noexcept { return data_; }

  QMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<QVector> nullspace_basis(const QMatrix& m);

// Throws Error(InvalidParameter) when singular.
QMatrix inverse(const QMatrix& m);

// Unique x with m x = b for square invertible m.
QVector solve(const QMatrix& m, const QVector& b);

// Row vector times matrix.
QVector row_times(std::span<const Rational> v, const QMatrix& m);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix diagonal_matrix(const QVector& d);
bool is_zero(std::span<const Rational> v);

}  // namespace solvlie

namespace solvlie {

// Some x with m x = b (free unknowns set to zero), or nullopt if the system
// is inconsistent.
std::optional<QVector> particular_solution(const QMatrix& m, const QVector& b);

}  // namespace solvlie
