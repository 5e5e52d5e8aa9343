#include "solvlie/rational_function.hpp"

#include <utility>

#include "solvlie/error.hpp"

namespace solvlie {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::Internal, "gcd does not divide operand");
  return std::move(*q);
}

}  // namespace

RationalFunction::RationalFunction(std::size_t variable_count)
    : num_(variable_count), den_(Polynomial::constant(variable_count, 1)) {}

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(p.variable_count(), 1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  *this = reduce(num, den);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = Polynomial::constant(num_.variable_count(), 1);
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction reduce(const Polynomial& num, const Polynomial& den) {
  if (num.variable_count() != den.variable_count())
    throw Error(ErrorCode::DimensionMismatch, "numerator and denominator over different variables");
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  const std::size_t n = num.variable_count();
  if (num.is_zero()) return RationalFunction(n);
  const Polynomial g = gcd(num, den);
  if (g.is_constant()) return {num, den, RationalFunction::Reduced{}};
  return {quotient(num, g), quotient(den, g), RationalFunction::Reduced{}};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return reduce(a.num_ + b.num_, a.den_);
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial bg = quotient(b.den_, g);
  const Polynomial ag = quotient(a.den_, g);
  return reduce(a.num_ * bg + b.num_ * ag, a.den_ * bg);
}

RationalFunction operator-(const RationalFunction& a) {
  return {-a.num_, a.den_, RationalFunction::Reduced{}};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.variable_count());
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  return {quotient(a.num_, g1) * quotient(b.num_, g2),
          quotient(a.den_, g2) * quotient(b.den_, g1), RationalFunction::Reduced{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction operator*(const Rational& s, const RationalFunction& a) {
  return {s * a.num_, a.den_, RationalFunction::Reduced{}};
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.is_constant()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

VectorField::VectorField(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.variable_count() != coeffs_.size())
      throw Error(ErrorCode::DimensionMismatch, "vector field coefficient over wrong variable set");
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Polynomial VectorField::apply(const Polynomial& p) const {
  if (p.variable_count() != coeffs_.size())
    throw Error(ErrorCode::DimensionMismatch, "vector field applied to polynomial over other variables");
  Polynomial r(p.variable_count());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero() || !p.depends_on(a)) continue;
    r += coeffs_[a] * derivative(p, a);
  }
  return r;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  if (den.is_constant()) return RationalFunction(apply(num));
  return reduce(apply(num) * den - num * apply(den), den * den);
}

std::string VectorField::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[a].to_string(names) + ")*d/d" + names[a];
  }
  return out.empty() ? "0" : out;
}

}  // namespace solvlie
