#include "solvlie/log_polynomial.hpp"

#include <utility>

#include "solvlie/error.hpp"

namespace solvlie {

LogPolynomial::LogPolynomial(const RationalFunction& c) : nvars_(c.variable_count()) {
  coeffs_.push_back(c);
  trim();
}

LogPolynomial::LogPolynomial(std::vector<RationalFunction> coefficients)
    : nvars_(coefficients.empty() ? 0 : coefficients.front().variable_count()),
      coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.variable_count() != nvars_)
      throw Error(ErrorCode::DimensionMismatch, "log-polynomial coefficients over different variables");
  trim();
}

LogPolynomial LogPolynomial::symbol(std::size_t variable_count) {
  return LogPolynomial(std::vector<RationalFunction>{
      RationalFunction(variable_count),
      RationalFunction(Polynomial::constant(variable_count, 1))});
}

RationalFunction LogPolynomial::coefficient(std::size_t m) const {
  return m < coeffs_.size() ? coeffs_[m] : RationalFunction(nvars_);
}

void LogPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LogPolynomial operator+(const LogPolynomial& a, const LogPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "log-polynomial variable mismatch");
  LogPolynomial r(a.nvars_);
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t m = 0; m < len; ++m) r.coeffs_.push_back(a.coefficient(m) + b.coefficient(m));
  r.trim();
  return r;
}

LogPolynomial operator-(const LogPolynomial& a, const LogPolynomial& b) {
  LogPolynomial nb(b.nvars_);
  for (const auto& c : b.coeffs_) nb.coeffs_.push_back(-c);
  return a + nb;
}

LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return LogPolynomial(a.is_zero() ? a.nvars_ : b.nvars_);
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "log-polynomial variable mismatch");
  LogPolynomial r(a.nvars_);
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, RationalFunction(a.nvars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

Rational LogPolynomial::evaluate(std::span<const Rational> point, const Rational& log_value) const {
  Rational sum = 0;
  for (std::size_t m = coeffs_.size(); m-- > 0;) sum = sum * log_value + coeffs_[m].evaluate(point);
  return sum;
}

std::string LogPolynomial::to_string(std::span<const std::string> names) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[m].to_string(names) + ")";
    if (m == 1) out += "*L";
    if (m > 1) out += "*L^" + std::to_string(m);
  }
  return out;
}

LogPolynomial derive(const LogPolynomial& lp, const RationalDerivation& d, const RationalFunction& dL) {
  const std::size_t n = lp.variable_count();
  const auto& c = lp.coefficients();
  std::vector<RationalFunction> out(c.size(), RationalFunction(n));
  for (std::size_t m = 0; m < c.size(); ++m) {
    out[m] = out[m] + d(c[m]);
    if (m > 0) out[m - 1] = out[m - 1] + Rational(static_cast<long>(m)) * (c[m] * dL);
  }
  if (out.empty()) return LogPolynomial(n);
  return LogPolynomial(std::move(out));
}

LogPolynomial derive(const LogPolynomial& lp, const VectorField& d, const RationalFunction& dL) {
  return derive(lp, [&d](const RationalFunction& f) { return d.apply(f); }, dL);
}

}  // namespace solvlie
