#include <doctest.h>

#include "solvlie/error.hpp"
#include "solvlie/families.hpp"

using namespace solvlie;

namespace {

std::vector<Rational> zeros(std::size_t k) { return std::vector<Rational>(k); }

FamilyLabel S(Family f, std::size_t n, std::vector<Rational> params = {}) { return {f, n, std::move(params)}; }

bool has_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("label syntax") {
  const FamilyLabel a = parse_family_label("s(n+1,1):6:beta=3/2");
  CHECK(a.family == Family::S1);
  CHECK(a.n == 6);
  CHECK(a.params == std::vector<Rational>{Rational(3, 2)});
  CHECK(to_string(a) == "s(n+1,1):6:beta=3/2");
  CHECK(to_string(parse_family_label("s(n+1,6):7:a=[0,1,-2,0]")) == "s(n+1,6):7:a=[0,1,-2,0]");
  CHECK(parse_family_label("n(n,1):5").family == Family::Nilradical);
  CHECK(parse_family_label("s(n+2):5").family == Family::Snp2);
  CHECK_THROWS_AS(parse_family_label("s(n+1,9):5"), Error);
  CHECK_THROWS_AS(parse_family_label("s(n+1,4):five"), Error);
  CHECK_THROWS_AS(parse_family_label("s(n+1,4):5:beta=1"), Error);
  CHECK(parse_field("R") == FieldTag::Real);
  CHECK_THROWS_AS(parse_field("Q"), Error);
}

TEST_CASE("label validation") {
  CHECK(has_code(ErrorCode::BadDimension, [] { build_nilradical(3); }));
  try {
    build_nilradical(3);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("h(1)") != std::string::npos);
  }
  CHECK(has_code(ErrorCode::InvalidParameter, [] { validated(S(Family::S1, 6, {0}), FieldTag::Complex); }));
  CHECK(has_code(ErrorCode::ExcludedParameter, [] { validated(S(Family::S1, 6, {4}), FieldTag::Complex); }));
  CHECK(validated(S(Family::S1, 6, {-4}), FieldTag::Complex).family == Family::S3);
  CHECK(has_code(ErrorCode::InvalidParameter, [] { validated(S(Family::S6, 6, {0, 0, 0}), FieldTag::Complex); }));
  CHECK(has_code(ErrorCode::InvalidParameter, [] { validated(S(Family::S6, 6, {2, 0, 0}), FieldTag::Complex); }));
  CHECK_NOTHROW(validated(S(Family::S6, 6, {-1, 0, 3}), FieldTag::Real));
  CHECK(has_code(ErrorCode::InvalidParameter, [] { validated(S(Family::S6, 6, {-1, 0, 3}), FieldTag::Complex); }));
  CHECK(has_code(ErrorCode::InvalidParameter, [] { validated(S(Family::S6, 6, {5, 2, 3}), FieldTag::Real); }));
  CHECK_NOTHROW(validated(S(Family::S6, 6, {5, 1, 3}), FieldTag::Real));
}

TEST_CASE("nilradical") {
  const LieAlgebra g = build_nilradical(4);
  CHECK(series_signature(g) == SeriesSignature{{4, 2, 0}, {4, 2, 1, 0}, {1, 2, 4}});
  const LieAlgebra g5 = build_nilradical(5);
  QVector e1(5);
  e1[0] = 1;
  CHECK(center(g5) == Subspace::span(5, {e1}));
  CHECK(kernel_in_image(jordan_block(4)));
  CHECK_FALSE(kernel_in_image(QMatrix(3, 3)));
  // The Jordan block is ad(e_n) up to sign on span{e_1..e_{n-1}}.
  const QMatrix ad = g5.adjoint_of_basis(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(ad(i, j) == -jordan_block(5)(i, j));
}

TEST_CASE("solvable extensions") {
  const auto sig = [](const FamilyLabel& l) { return series_signature(build_solvable(l, FieldTag::Complex)); };
  const auto s4 = sig(S(Family::S4, 5));
  CHECK(s4.derived == std::vector<std::size_t>{6, 4, 0});
  CHECK(s4.lower_central == std::vector<std::size_t>{6, 4, 4});
  const LieAlgebra snp2 = build_solvable(S(Family::Snp2, 5), FieldTag::Complex);
  CHECK(snp2.dimension() == 7);
  CHECK(series_signature(snp2).derived == std::vector<std::size_t>{7, 5, 3, 0});
  CHECK(sig(S(Family::S3, 5)).upper_central == std::vector<std::size_t>{1, 1});
  CHECK(sig(S(Family::S1, 6, {5})).derived == std::vector<std::size_t>{7, 6, 4, 0});
  CHECK(sig(S(Family::S2, 4)).lower_central == std::vector<std::size_t>{5, 3, 3});
  CHECK(series_signature(build_nilradical(6)).upper_central == std::vector<std::size_t>{1, 2, 3, 4, 6});
  CHECK_THROWS_AS(build_solvable(S(Family::Nilradical, 5), FieldTag::Complex), Error);
}

TEST_CASE("printed brackets of s(n+1,1)") {
  const std::size_t n = 6;
  const Rational beta(3, 2);
  const LieAlgebra g = build_solvable(S(Family::S1, n, {beta}), FieldTag::Complex);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    QVector want(n + 1);
    want[k - 1] = Rational(static_cast<long>(n - k - 1)) + beta;
    CHECK(g.structure(n, k - 1) == want);
  }
  QVector en(n + 1);
  en[n - 1] = 1;
  CHECK(g.structure(n, n - 1) == en);
}

TEST_CASE("canonical derivations") {
  const std::size_t n = 6;
  auto a = zeros(n - 2);
  a.back() = 1;
  const QMatrix d = canonical_derivation(n, 1, 1, a);
  for (std::size_t i = 0; i < n - 1; ++i) CHECK(d(i, i) == Rational(static_cast<long>(n - 1 - i)));
  CHECK(d(n - 1, n - 1) == 1);
  CHECK(d(n - 1, n - 2) == 1);

  const Rational beta(2, 7);
  const QMatrix dd = canonical_derivation(n, 1, beta, zeros(n - 2));
  for (std::size_t i = 0; i < n - 1; ++i) CHECK(dd(i, i) == Rational(static_cast<long>(n - 2 - i)) + beta);
  CHECK(dd(n - 1, n - 1) == 1);
  CHECK(canonical_derivation(n, 0, 0, zeros(n - 2)).is_zero());

  const LieAlgebra nil = build_nilradical(n);
  const QMatrix t = canonical_derivation(n, 2, -1, {3, 1, 4, 5});
  CHECK(is_derivation(nil, t));
  CHECK(is_canonical_shape(n, t));
  const auto p = canonical_parameters(n, t);
  CHECK(p.alpha == 2);
  CHECK(p.beta == -1);
  CHECK(p.a == std::vector<Rational>{3, 1, 4, 5});
}

TEST_CASE("reduction to canonical form") {
  const std::size_t n = 6;
  const LieAlgebra nil = build_nilradical(n);
  const QMatrix c = canonical_derivation(n, 1, 2, {1, -1, 2, 3});
  QVector z{0, 2, -1, 5, 3, 7};
  const QMatrix d = c + nil.adjoint(z);
  CHECK_FALSE(is_canonical_shape(n, d));
  CHECK(reduce_to_canonical(n, d) == c);
  CHECK(has_code(ErrorCode::NotADerivation, [&] { reduce_to_canonical(n, QMatrix::identity(n)); }));
}

TEST_CASE("basis changes") {
  const std::size_t n = 5;
  CHECK(conjugator(n, Scaling{1, 1}) == QMatrix::identity(n));

  const Rational beta(3);
  auto a = zeros(n - 2);
  a.back() = 4;
  const LieAlgebra g = build_extension({n, {canonical_derivation(n, 1, beta, a)}, 0});
  Unipotent u{QVector(n - 2), QVector(n - 1)};
  u.v[n - 2] = -a.back() / (beta - 1);
  const auto r = apply_basis_change(g, n, u);
  const auto spec = extract_extension(r.algebra, n);
  CHECK(spec.derivations[0] == canonical_derivation(n, 1, beta, zeros(n - 2)));
  CHECK(conjugate(canonical_derivation(n, 1, beta, a), r.conjugator) == spec.derivations[0]);

  const QMatrix diag = canonical_derivation(n, 1, beta, zeros(n - 2));
  CHECK(conjugate(diag, conjugator(n, Scaling{Rational(2, 3), 5})) == diag);

  // Scaling sends a_j to a_j / omega^(j-1) and a_n to a_n omega / tau.
  const QMatrix t = canonical_derivation(n, 1, 1, {2, 3, 4});
  const QMatrix s = conjugate(t, conjugator(n, Scaling{2, 3}));
  CHECK(canonical_parameters(n, s).a == std::vector<Rational>{Rational(1, 2), Rational(3, 8), Rational(8, 3)});

  const LieAlgebra ext = build_solvable(S(Family::S4, n), FieldTag::Complex);
  CHECK(has_code(ErrorCode::InvalidParameter, [&] { conjugator(n, Scaling{0, 1}); }));
  CHECK_NOTHROW(apply_basis_change(ext, n, Scaling{2, 1}));
}

TEST_CASE("extensions from specs") {
  const std::size_t n = 5;
  const QMatrix d1 = canonical_derivation(n, 1, 0, zeros(n - 2));
  const QMatrix d2 = canonical_derivation(n, 0, 1, zeros(n - 2));
  const LieAlgebra g = build_extension({n, {d1, d2}, 3});
  CHECK(g.structure(n, n + 1)[0] == 3);
  CHECK(extract_extension(g, n).gamma == 3);
  CHECK(has_code(ErrorCode::NotADerivation, [&] { build_extension({n, {QMatrix::identity(n)}, 0}); }));
  const QMatrix d3 = canonical_derivation(n, 0, 1, {1, 0, 0});
  CHECK(has_code(ErrorCode::CommutatorNotInner, [&] { build_extension({n, {d1, d3}, 0}); }));
}

TEST_CASE("S6 normalization") {
  const auto c = normalize_s6({5, 0, 0}, FieldTag::Complex);
  REQUIRE(c);
  CHECK(c->params == std::vector<Rational>{1, 0, 0});
  CHECK_FALSE(c->omega.has_value());

  const auto r = normalize_s6({4, 0, 8}, FieldTag::Complex);
  REQUIRE(r);
  CHECK(r->params == std::vector<Rational>{1, 0, Rational(1, 2)});
  CHECK(r->omega == Rational(2));

  // Over R the even index a_4 wins the pivot.
  const auto re = normalize_s6({3, 8, 0, 0}, FieldTag::Real);
  REQUIRE(re);
  CHECK(re->params[1] == 1);
  CHECK(re->params[0] == Rational(3, 4));

  const auto neg = normalize_s6({-4, 0, 0}, FieldTag::Real);
  REQUIRE(neg);
  CHECK(neg->params == std::vector<Rational>{-1, 0, 0});
  CHECK(normalize_s6({2, 0, 0, 0}, FieldTag::Complex)->params == std::vector<Rational>{1, 0, 0, 0});
  // a_4 = 2, a_6 = 1: the scaling needs c^3 = 2.
  CHECK_FALSE(normalize_s6({0, 2, 0, 1}, FieldTag::Complex).has_value());
  CHECK(has_code(ErrorCode::InvalidParameter, [] { normalize_s6({0, 0}, FieldTag::Complex); }));
}

TEST_CASE("expected data") {
  CHECK(expected_invariant_count(S(Family::Nilradical, 7)) == 5);
  CHECK(expected_invariant_count(S(Family::S2, 4)) == 1);
  CHECK(expected_invariant_count(S(Family::Snp2, 5)) == 1);
  CHECK(expected_signature(S(Family::Nilradical, 5)).lower_central == std::vector<std::size_t>{5, 3, 2, 1, 0});
}

}
