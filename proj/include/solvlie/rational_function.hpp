#pragma once

#include <span>
#include <string>

#include "solvlie/polynomial.hpp"

namespace solvlie {

// Quotient of polynomials kept in lowest terms with a monic denominator,
// so equal functions have identical representations.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t variable_count = 0);
  RationalFunction(const Polynomial& p);  // NOLINT: polynomials embed implicitly
  RationalFunction(const Polynomial& num, const Polynomial& den);

  std::size_t variable_count() const noexcept { return num_.variable_count(); }
  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rational& s, const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws Error(ZeroDenominator) if the denominator vanishes at point.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(std::span<const std::string> names) const;

  friend RationalFunction reduce(const Polynomial& num, const Polynomial& den);

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced);

  Polynomial num_;
  Polynomial den_;
};

RationalFunction reduce(const Polynomial& num, const Polynomial& den);

// A first-order operator sum_a coeff[a] * d/dx_a acting on Q[x_1..x_N]
// and its fraction field.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> coefficients);

  std::size_t variable_count() const noexcept { return coeffs_.size(); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
  const Polynomial& coefficient(std::size_t var) const { return coeffs_.at(var); }
  bool is_zero() const;

  Polynomial apply(const Polynomial& p) const;
  RationalFunction apply(const RationalFunction& f) const;

  friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Polynomial> coeffs_;
};

}  // namespace solvlie
