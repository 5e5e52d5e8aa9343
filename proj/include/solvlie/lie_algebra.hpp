#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solvlie/matrix.hpp"

namespace solvlie {

// Finite-dimensional Lie algebra over Q given by structure constants
// [b_a, b_b] = sum_c c^c_ab b_c. Only a < b is stored; antisymmetry is
// implied. Immutable once built.
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, QVector>;

  LieAlgebra() = default;
  // Entries with a > b are stored negated under (b, a); a == b is rejected.
  LieAlgebra(std::vector<std::string> labels, const BracketTable& brackets);

  static LieAlgebra abelian(std::size_t n, const std::string& stem = "e");

  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(std::string_view label) const;

  // Nonzero brackets of basis pairs a < b.
  const BracketTable& table() const noexcept { return table_; }
  const QVector& structure(std::size_t a, std::size_t b) const { return dense_[a * dimension() + b]; }
  QVector basis_vector(std::size_t a) const;

  QVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  // Row convention: row a holds the coordinates of [x, b_a].
  QMatrix adjoint(std::span<const Rational> x) const;
  QMatrix adjoint_of_basis(std::size_t a) const;

  // New basis b'_a = sum_b P_ab b_b; labels are kept.
  LieAlgebra change_basis(const QMatrix& p) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  BracketTable table_;
  std::vector<QVector> dense_;
};

// Subspace of F^N stored as the nonzero rows of its reduced row-echelon
// form, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<QVector>& basis() const noexcept { return basis_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in basis(); throws NotAnIdeal-free Error(InvalidParameter)
  // when v is outside.
  QVector coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
};

// Violating basis triples a < b < c of the Jacobi identity.
std::vector<std::array<std::size_t, 3>> jacobi_violations(const LieAlgebra& g);

// Span of all brackets [x, y], x in a, y in b.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

// Each series starts with the whole algebra (the center for the upper
// series). A series that reaches 0 (or the whole algebra for the upper
// one) ends there; one that stabilizes elsewhere ends with the repeated
// term, so its dimension list shows e.g. [7,5,5]. A zero center gives [0].
std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
std::vector<Subspace> upper_central_series(const LieAlgebra& g);
std::vector<std::size_t> dimensions(const std::vector<Subspace>& series);

Subspace centralizer(const LieAlgebra& g, const Subspace& h);
Subspace center(const LieAlgebra& g);

struct SeriesSignature {
  std::vector<std::size_t> derived;
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> upper_central;
  friend bool operator==(const SeriesSignature&, const SeriesSignature&) = default;
};

SeriesSignature series_signature(const LieAlgebra& g);
std::string format_dimensions(const std::vector<std::size_t>& dims, bool mark_stabilized = true);

struct Nilpotency {
  bool holds = false;
  std::size_t degree = 0;  // first k with g^k = 0 (lower central) or g^(k) = 0 (derived)
};
Nilpotency nilpotency(const LieAlgebra& g);
Nilpotency solvability(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& s);
// Lower central series of s as a subalgebra reaches zero.
bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s);

bool is_derivation(const LieAlgebra& g, const QMatrix& d);
std::vector<QMatrix> derivation_space(const LieAlgebra& g);
std::vector<QMatrix> inner_derivation_space(const LieAlgebra& g);
// Rank of a list of matrices viewed as vectors.
std::size_t span_dimension(const std::vector<QMatrix>& mats);

// ad_x restricted to the ideal, in the ideal's rref basis (row convention).
QMatrix restricted_adjoint(const LieAlgebra& g, const Subspace& ideal, std::span<const Rational> x);

// No nontrivial combination of the matrices is nilpotent. Lower triangular
// inputs reduce to a linear condition on the diagonals; otherwise up to
// two matrices are handled through trace-power conditions over the
// complex numbers.
bool nil_independent(const std::vector<QMatrix>& mats);
bool nil_independent(const LieAlgebra& g, const Subspace& ideal, const std::vector<QVector>& outer);

bool is_nilpotent_matrix(const QMatrix& m);

// Derivation-algebra shape of the single-Jordan-block algebra of dimension
// n: lower triangular, Toeplitz below the diagonal on rows 1..n-1, zero last
// column above the corner, and diagonal D_ii = (n - i + shift) D_nn +
// D_{n-1,n-1} for i <= n-1. The derivation solve gives shift = -1; shift =
// +1 is the alternative reading kept for comparison.
bool diagonal_rule_holds(std::size_t n, const QMatrix& d, int shift);
bool verify_derivation_pattern(std::size_t n, const std::vector<QMatrix>& basis);

// Plain-text structure-constant interchange format:
//   basis = e1, e2, ..., f
//   [e3,e5] = 1*e2
//   [f,e1] = 3/2*e1 - 1*e2
// '#' starts a comment; omitted brackets are zero.
std::string to_structure_table(const LieAlgebra& g);
LieAlgebra parse_structure_table(std::string_view text);

}  // namespace solvlie
