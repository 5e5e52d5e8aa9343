#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "solvlie/rational_function.hpp"

namespace solvlie {

// Polynomial in a formal transcendental symbol L with rational-function
// coefficients; coefficient m multiplies L^m. Used with L = ln(xi_0).
class LogPolynomial {
 public:
  explicit LogPolynomial(std::size_t variable_count = 0) : nvars_(variable_count) {}
  LogPolynomial(const RationalFunction& c);  // NOLINT: constants embed implicitly
  explicit LogPolynomial(std::vector<RationalFunction> coefficients);

  static LogPolynomial symbol(std::size_t variable_count);

  std::size_t variable_count() const noexcept { return nvars_; }
  const std::vector<RationalFunction>& coefficients() const noexcept { return coeffs_; }
  RationalFunction coefficient(std::size_t m) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Highest power of L present; 0 for zero and for L-free objects.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  friend LogPolynomial operator+(const LogPolynomial& a, const LogPolynomial& b);
  friend LogPolynomial operator-(const LogPolynomial& a, const LogPolynomial& b);
  friend LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b);
  friend bool operator==(const LogPolynomial& a, const LogPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  // Value with L replaced by a number.
  Rational evaluate(std::span<const Rational> point, const Rational& log_value) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void trim();

  std::size_t nvars_;
  std::vector<RationalFunction> coeffs_;
};

using RationalDerivation = std::function<RationalFunction(const RationalFunction&)>;

// Extends a derivation d of the rational-function field to Q(x)[L] with
// d(L) = dL: sum_m d(c_m) L^m + m c_m L^(m-1) dL.
LogPolynomial derive(const LogPolynomial& lp, const RationalDerivation& d, const RationalFunction& dL);
LogPolynomial derive(const LogPolynomial& lp, const VectorField& d, const RationalFunction& dL);

}  // namespace solvlie
