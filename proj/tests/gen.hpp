#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "solvlie/matrix.hpp"
#include "solvlie/polynomial.hpp"

namespace gen {

using solvlie::Polynomial;
using solvlie::QMatrix;
using solvlie::Rational;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 9, long den = 5) {
    Rational r(integer(-bound, bound), integer(1, den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long bound = 9, long den = 5) {
    Rational r;
    do r = rational(bound, den);
    while (r == 0);
    return r;
  }

  QMatrix matrix(std::size_t rows, std::size_t cols, long bound = 4) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  // Random rank by multiplying thin factors.
  QMatrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r) {
    return matrix(rows, r, 3) * matrix(r, cols, 3);
  }

  Polynomial polynomial(std::size_t nvars, std::size_t terms = 4, unsigned max_exp = 3) {
    Polynomial p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
      solvlie::Exponents e(nvars);
      for (auto& x : e) x = static_cast<std::uint32_t>(integer(0, max_exp));
      p.add_term(e, rational());
    }
    return p;
  }

  Polynomial nonzero_polynomial(std::size_t nvars, std::size_t terms = 3, unsigned max_exp = 2) {
    Polynomial p(nvars);
    while (p.is_zero()) p = polynomial(nvars, terms, max_exp);
    return p;
  }

  std::vector<Rational> point(std::size_t n, long bound = 50) {
    std::vector<Rational> x(n);
    for (auto& v : x) v = rational(bound, 7);
    return x;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
