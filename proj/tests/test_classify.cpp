#include <doctest.h>

#include "gen.hpp"
#include "solvlie/error.hpp"
#include "solvlie/families.hpp"

using namespace solvlie;

namespace {

std::vector<Rational> zeros(std::size_t k) { return std::vector<Rational>(k); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("alpha normalization") {
  const std::size_t n = 5;
  const FamilyLabel l = classify_extension({n, {canonical_derivation(n, 2, 4, zeros(n - 2))}, 0}, FieldTag::Complex);
  CHECK(l == FamilyLabel{Family::S1, n, {2}});
}

TEST_CASE("S6 from a scaled derivation") {
  const std::size_t n = 6;
  const ExtensionSpec spec{n, {canonical_derivation(n, 0, 3, {5, 0, 0, 0})}, 0};
  const auto c = classify_algebra(build_extension(spec), n, FieldTag::Complex);
  CHECK(c.label == FamilyLabel{Family::S6, n, {1, 0, 0}});
  // The needed scaling is omega^2 = 5/3, so the final table is not the
  // printed one over Q.
  CHECK_FALSE(c.exact_match);

  const ExtensionSpec spec2{n, {canonical_derivation(n, 0, 3, {12, 0, 0, 0})}, 0};
  const auto c2 = classify_algebra(build_extension(spec2), n, FieldTag::Complex);
  CHECK(c2.label == FamilyLabel{Family::S6, n, {1, 0, 0}});
  CHECK(c2.exact_match);
  CHECK(c2.final_algebra == build_solvable(c2.label, FieldTag::Complex));
}

TEST_CASE("case split on beta") {
  const std::size_t n = 6;
  const auto label = [&](const Rational& alpha, const Rational& beta, std::vector<Rational> a) {
    return classify_extension({n, {canonical_derivation(n, alpha, beta, a)}, 0}, FieldTag::Complex);
  };
  CHECK(label(1, 0, {1, 2, 3, 4}).family == Family::S2);
  CHECK(label(1, -4, {1, 0, 3, 4}).family == Family::S3);
  CHECK(label(1, 1, {0, 2, 0, 4}).family == Family::S5);
  CHECK(label(1, 1, {0, 2, 0, 0}) == FamilyLabel{Family::S1, n, {1}});
  CHECK(label(3, 2, {1, 1, 1, 1}) == FamilyLabel{Family::S1, n, {Rational(2, 3)}});
  CHECK(label(0, 2, {0, 0, 0, 5}).family == Family::S4);
  CHECK(code_of([&] { label(1, 4, zeros(4)); }) == ErrorCode::ExcludedParameter);
  CHECK(code_of([&] { label(0, 0, {1, 0, 0, 0}); }) == ErrorCode::NilpotentInput);
}

TEST_CASE("two outer derivations") {
  const std::size_t n = 5;
  const QMatrix d1 = canonical_derivation(n, 1, 0, zeros(n - 2));
  const QMatrix d2 = canonical_derivation(n, 0, 1, zeros(n - 2));
  // Mixed combinations with gamma.
  const QMatrix m1 = Rational(2) * d1 + d2;
  const QMatrix m2 = d1 - Rational(3) * d2;
  const auto c = classify_algebra(build_extension({n, {m1, m2}, 7}), n, FieldTag::Real);
  CHECK(c.label.family == Family::Snp2);
  CHECK(c.exact_match);
  CHECK(is_zero(c.final_algebra.structure(n, n + 1)));
  CHECK(code_of([&] { classify_extension({n, {d1, Rational(2) * d1}, 0}, FieldTag::Complex); }) ==
        ErrorCode::NotNilIndependent);
}

TEST_CASE("input checks") {
  const std::size_t n = 5;
  CHECK(code_of([&] { classify_algebra(build_nilradical(n), n, FieldTag::Complex); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([&] { classify_algebra(LieAlgebra::abelian(n + 1), n, FieldTag::Complex); }) ==
        ErrorCode::InvalidParameter);
  const LieAlgebra g = build_solvable({Family::S4, n, {}}, FieldTag::Complex);
  LieAlgebra::BracketTable t = g.table();
  QVector extra(n + 3);
  LieAlgebra::BracketTable t3;
  for (const auto& [k, v] : t) {
    QVector w(v);
    w.resize(n + 3);
    t3[k] = w;
  }
  t3[{n, n + 1}] = extra;
  auto labels = g.labels();
  labels.push_back("f2");
  labels.push_back("f3");
  CHECK(code_of([&] { classify_algebra(LieAlgebra(labels, t3), n, FieldTag::Complex); }) ==
        ErrorCode::NotNilIndependent);
}

TEST_CASE("basis records the change") {
  const std::size_t n = 6;
  const LieAlgebra g = build_extension({n, {canonical_derivation(n, 2, 1, {1, -1, 2, 3})}, 0});
  const auto c = classify_algebra(g, n, FieldTag::Complex);
  CHECK(c.exact_match);
  CHECK(g.change_basis(c.basis) == c.final_algebra);
}

}
