#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solvlie/rational.hpp"

namespace solvlie {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic, greatest first: higher total degree wins, ties
// broken by the exponent of the lowest-index variable.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t variable_count = 0) : nvars_(variable_count) {}

  static Polynomial constant(std::size_t variable_count, const Rational& c);
  static Polynomial variable(std::size_t variable_count, std::size_t index);
  static Polynomial monomial(const Exponents& exps, const Rational& c);

  std::size_t variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Rational constant_term() const;

  // Graded-lex leading term; requires nonzero.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  // Homogeneous of the given total degree (zero counts).
  bool is_homogeneous(unsigned degree) const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Terms in canonical order, e.g. "-1/2*e2^2 + 1*e1*e3". Zero is "0".
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "g");

// Exact partial derivative with respect to variable var.
Polynomial derivative(const Polynomial& p, std::size_t var);

// q with a == q * b, if b divides a exactly.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalized to leading coefficient 1 (zero only
// when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial make_monic(const Polynomial& p);

}  // namespace solvlie
