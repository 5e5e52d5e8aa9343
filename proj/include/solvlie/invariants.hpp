#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "solvlie/families.hpp"
#include "solvlie/log_polynomial.hpp"

namespace solvlie {

// Coadjoint operators act on polynomials in the dual coordinates, one
// variable per basis element (named by the algebra's labels).
// Operator k: sum_a (sum_b g_b c^b_{ka}) d/dg_a.
std::vector<VectorField> coadjoint_operators(const LieAlgebra& g);

// C_ij = sum_b c^b_ij g_b.
using PolyMatrix = std::vector<std::vector<Polynomial>>;
PolyMatrix structure_matrix(const LieAlgebra& g);
QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

struct SamplingOptions {
  unsigned trials = 5;
  long bound = 1000;
  std::uint64_t seed = 0;
};

// Max rank of C over random integer points in [-bound, bound].
std::size_t generic_rank(const PolyMatrix& c, const SamplingOptions& opt = {});
std::size_t invariant_count(const LieAlgebra& g, const SamplingOptions& opt = {});

// xi_0 = e_1 and for 1 <= k <= n-3
//   xi_k = (-1)^k k/(k+1)! e_2^{k+1} + sum_{j<k} (-1)^j/j! e_2^j e_{k+2-j} e_1^{k-j},
// as a polynomial in `variable_count` >= n variables.
Polynomial xi(std::size_t n, std::size_t k, std::size_t variable_count);

// prod_i xi_{index_i}^{exponent_i} * log_part, with L = ln(xi_0) inside
// log_part.
struct InvariantExpr {
  std::size_t n = 4;
  std::size_t variable_count = 4;
  std::vector<std::pair<std::size_t, Rational>> factors;
  LogPolynomial log_part;

  std::string to_string(std::span<const std::string> names) const;
};

// k-th invariant of a family: xi_k (0 <= k <= n-3) for the nilradical,
// chi_k (1 <= k <= n-3) for the one-element extensions and chi_k
// (1 <= k <= n-4) for s(n+2). Polynomials live in dim(algebra) variables.
InvariantExpr chi(const FamilyLabel& label, std::size_t k);
std::vector<InvariantExpr> invariants_of(const FamilyLabel& label);

// Truncated operators on e_1..e_{n-1}, padded to dim(algebra) variables.
// One operator except for s(n+2), which has two.
std::vector<VectorField> truncated_operators(const FamilyLabel& label);

// lambda with op(p) = lambda p for a diagonal op. Throws NotEigenvector.
Rational weighted_eigenvalue(const VectorField& op, const Polynomial& p);

// (sum_i q_i op(xi_i)/xi_i) P + op(P) where P is the log part and
// op(L) = op(xi_0)/xi_0; zero exactly when op annihilates the expression.
LogPolynomial annihilation_residual(const VectorField& op, const InvariantExpr& inv);
bool verify_annihilation(const std::vector<VectorField>& ops, const InvariantExpr& inv);
bool verify_annihilation(const std::vector<VectorField>& ops, const Polynomial& p);

// Max Jacobian rank over random rational points. Throws DegeneratePoint
// when every trial hits a zero of some xi factor or denominator.
std::size_t functional_independence(const std::vector<InvariantExpr>& invs, const SamplingOptions& opt = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Report {
  FamilyLabel label;
  FieldTag field = FieldTag::Complex;
  std::vector<std::string> variables;
  std::size_t count_expected = 0;
  std::size_t count_computed = 0;
  std::size_t rank_c = 0;
  std::vector<InvariantExpr> invariants;
  std::vector<bool> annihilation;
  std::size_t independence_rank = 0;
  std::vector<Check> checks;

  bool passed() const;
  std::vector<std::string> witnesses() const;
};

Report verify_theorem(const FamilyLabel& label, FieldTag field, const SamplingOptions& opt = {});

}  // namespace solvlie
