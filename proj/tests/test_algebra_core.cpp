#include <doctest.h>

#include "oracles.hpp"
#include "solvlie/error.hpp"
#include "solvlie/families.hpp"

using namespace solvlie;

namespace {

QVector unit(std::size_t n, std::size_t j) {
  QVector v(n);
  v[j - 1] = 1;
  return v;
}

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<QVector> vs;
  for (auto j : idx) vs.push_back(unit(n, j));
  return Subspace::span(n, vs);
}

}  // namespace

TEST_SUITE("algebra-core") {

TEST_CASE("brackets of n(5,1)") {
  const LieAlgebra g = build_nilradical(5);
  CHECK(g.bracket(unit(5, 3), unit(5, 5)) == unit(5, 2));
  CHECK(is_zero(g.bracket(unit(5, 1), unit(5, 5))));
  const QVector x{1, -2, Rational(1, 3), 4, 5};
  CHECK(is_zero(g.bracket(x, x)));
  CHECK_THROWS_AS(g.bracket(QVector(4), x), Error);
}

TEST_CASE("Jacobi check") {
  for (std::size_t n = 4; n <= 10; ++n) CHECK(jacobi_violations(build_nilradical(n)).empty());
  CHECK(jacobi_violations(LieAlgebra::abelian(4)).empty());
  LieAlgebra::BracketTable t;
  t[{0, 1}] = QVector{0, 0, 1};
  t[{0, 2}] = QVector{1, 0, 0};
  CHECK_FALSE(jacobi_violations(LieAlgebra({"e1", "e2", "e3"}, t)).empty());
}

TEST_CASE("characteristic series") {
  CHECK(dimensions(derived_series(build_nilradical(4))) == std::vector<std::size_t>{4, 2, 0});
  CHECK(dimensions(derived_series(LieAlgebra::abelian(3))) == std::vector<std::size_t>{3, 0});
  const LieAlgebra s2 = build_solvable({Family::S2, 5, {}}, FieldTag::Complex);
  CHECK(dimensions(derived_series(s2)) == std::vector<std::size_t>{6, 4, 2, 0});

  CHECK(dimensions(lower_central_series(build_nilradical(5))) == std::vector<std::size_t>{5, 3, 2, 1, 0});
  CHECK(dimensions(lower_central_series(build_nilradical(4))) == std::vector<std::size_t>{4, 2, 1, 0});
  const LieAlgebra snp2 = build_solvable({Family::Snp2, 5, {}}, FieldTag::Complex);
  CHECK(dimensions(lower_central_series(snp2)) == std::vector<std::size_t>{7, 5, 5});
  CHECK(format_dimensions({7, 5, 5}) == "[7,5,5,...]");

  CHECK(dimensions(upper_central_series(build_nilradical(5))) == std::vector<std::size_t>{1, 2, 3, 5});
  const LieAlgebra s3 = build_solvable({Family::S3, 5, {}}, FieldTag::Complex);
  CHECK(dimensions(upper_central_series(s3)) == std::vector<std::size_t>{1, 1});
  CHECK(dimensions(upper_central_series(snp2)) == std::vector<std::size_t>{0});
}

TEST_CASE("series are deterministic") {
  const LieAlgebra g = build_solvable({Family::S5, 6, {}}, FieldTag::Complex);
  CHECK(derived_series(g) == derived_series(g));
  CHECK(upper_central_series(g) == upper_central_series(g));
}

TEST_CASE("centralizers") {
  const std::size_t n = 6;
  const LieAlgebra g = build_nilradical(n);
  const auto us = upper_central_series(g);
  const Subspace top = us[us.size() - 2];
  CHECK(top.dimension() == n - 2);
  CHECK(centralizer(g, top) == span_of(n, {1, 2, 3, 4, 5}));
  CHECK(centralizer(LieAlgebra::abelian(3), Subspace::whole(3)) == Subspace::whole(3));
  CHECK(centralizer(build_nilradical(5), span_of(5, {5})) == span_of(5, {1, 5}));
  CHECK(center(build_nilradical(5)) == span_of(5, {1}));
}

TEST_CASE("nilpotency and solvability") {
  const auto nil = nilpotency(build_nilradical(5));
  CHECK(nil.holds);
  CHECK(nil.degree == 4);
  const LieAlgebra s4 = build_solvable({Family::S4, 5, {}}, FieldTag::Complex);
  CHECK_FALSE(nilpotency(s4).holds);
  CHECK(solvability(s4).holds);
  const auto ab = nilpotency(LieAlgebra::abelian(3));
  CHECK(ab.holds);
  CHECK(ab.degree == 1);
}

TEST_CASE("derivation spaces") {
  CHECK(derivation_space(build_nilradical(4)).size() == 7);
  CHECK(derivation_space(LieAlgebra::abelian(2)).size() == 4);
  CHECK(derivation_space(build_nilradical(6)).size() == 11);
  for (std::size_t n = 4; n <= 7; ++n) {
    const LieAlgebra g = build_nilradical(n);
    const auto der = derivation_space(g);
    CHECK(der.size() == oracle::nil_derivation_dimension(n));
    for (const auto& d : der) CHECK(is_derivation(g, d));
    CHECK(span_dimension(der) == der.size());
    auto both = der;
    for (const auto& d : inner_derivation_space(g)) both.push_back(d);
    CHECK(span_dimension(both) == der.size());
    CHECK(span_dimension(inner_derivation_space(g)) == n - 1);
  }
  CHECK(span_dimension(inner_derivation_space(LieAlgebra::abelian(3))) == 0);
  CHECK(span_dimension(inner_derivation_space(build_solvable({Family::Snp2, 5, {}}, FieldTag::Complex))) == 7);
}

TEST_CASE("derivation pattern") {
  for (std::size_t n = 4; n <= 8; ++n) CHECK(verify_derivation_pattern(n, derivation_space(build_nilradical(n))));
  QMatrix bad(5, 5);
  bad(0, 4) = 1;
  CHECK_FALSE(verify_derivation_pattern(5, {bad}));
  // diag(1,...,1,0) is the alpha = 0, beta = 1 point; the identity is not a
  // derivation at all.
  QVector d(5, Rational(1));
  d[4] = 0;
  CHECK(verify_derivation_pattern(5, {diagonal_matrix(d)}));
  CHECK_FALSE(verify_derivation_pattern(5, {QMatrix::identity(5)}));
}

TEST_CASE("diagonal rule shift") {
  const QMatrix d = canonical_derivation(6, 1, 0, std::vector<Rational>(4));
  CHECK(diagonal_rule_holds(6, d, -1));
  CHECK_FALSE(diagonal_rule_holds(6, d, +1));
}

TEST_CASE("nil-independence") {
  const std::size_t n = 6;
  const QMatrix d1 = canonical_derivation(n, 1, 0, std::vector<Rational>(n - 2));
  const QMatrix d2 = canonical_derivation(n, 0, 1, std::vector<Rational>(n - 2));
  CHECK(nil_independent({d1, d2}));
  CHECK_FALSE(nil_independent({d1, d1}));
  CHECK(nil_independent({canonical_derivation(n, 1, 3, std::vector<Rational>(n - 2))}));
  CHECK_FALSE(nil_independent({build_nilradical(n).adjoint_of_basis(n - 1)}));

  const LieAlgebra g = build_solvable({Family::Snp2, n, {}}, FieldTag::Complex);
  const Subspace nil = span_of(n + 2, {1, 2, 3, 4, 5, 6});
  CHECK(nil_independent(g, nil, {unit(n + 2, n + 1), unit(n + 2, n + 2)}));
  CHECK_THROWS_AS(nil_independent(g, span_of(n + 2, {1, n + 1}), {unit(n + 2, n + 2)}), Error);
}

TEST_CASE("nil-independence off the triangular path") {
  // Rotation-like pair: neither is triangular, but every nonzero combination
  // of [[1,0],[0,-1]] and [[0,1],[1,0]] has eigenvalues +-sqrt(s^2+t^2).
  const QMatrix a = QMatrix::from_rows({{1, 0}, {0, -1}}, 2);
  const QMatrix b = QMatrix::from_rows({{0, 1}, {1, 0}}, 2);
  // Over C, s = 1, t = i gives a nilpotent combination.
  CHECK_FALSE(nil_independent({a, b}));
  // s(2I + b) + t b is nilpotent only for s = t = 0.
  const QMatrix c = QMatrix::from_rows({{2, 1}, {1, 2}}, 2);
  CHECK(nil_independent({c, b}));
}

TEST_CASE("structure table round trip") {
  const LieAlgebra g = build_solvable({Family::S6, 6, {1, 0, -2}}, FieldTag::Complex);
  const std::string text = to_structure_table(g);
  CHECK(parse_structure_table(text) == g);
  const LieAlgebra h = parse_structure_table("# comment\nbasis = x, y, z\n[x,y] = 1*z\n\n");
  CHECK(h.dimension() == 3);
  CHECK(h.structure(0, 1) == QVector{0, 0, 1});
  CHECK_THROWS_AS(parse_structure_table("[x,y] = 1*w\nbasis = x, y\n"), Error);
}

}
