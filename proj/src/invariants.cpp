#include "solvlie/invariants.hpp"

#include <algorithm>

#include "solvlie/error.hpp"

namespace solvlie {

std::vector<VectorField> coadjoint_operators(const LieAlgebra& g) {
  const std::size_t dim = g.dimension();
  std::vector<VectorField> ops;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Polynomial> coeffs;
    for (std::size_t a = 0; a < dim; ++a) {
      Polynomial c(dim);
      const QVector& s = g.structure(k, a);
      for (std::size_t b = 0; b < dim; ++b)
        if (s[b] != 0) c += s[b] * Polynomial::variable(dim, b);
      coeffs.push_back(std::move(c));
    }
    ops.emplace_back(std::move(coeffs));
  }
  return ops;
}

PolyMatrix structure_matrix(const LieAlgebra& g) {
  const std::size_t dim = g.dimension();
  PolyMatrix c(dim, std::vector<Polynomial>(dim, Polynomial(dim)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const QVector& s = g.structure(i, j);
      for (std::size_t b = 0; b < dim; ++b)
        if (s[b] != 0) c[i][j] += s[b] * Polynomial::variable(dim, b);
    }
  return c;
}

QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  QMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j].evaluate(point);
  return out;
}

std::size_t generic_rank(const PolyMatrix& c, const SamplingOptions& opt) {
  if (opt.trials < 1) throw Error(ErrorCode::InvalidParameter, "at least one trial is needed");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> coord(-opt.bound, opt.bound);
  const std::size_t nvars = c.empty() ? 0 : c[0][0].variable_count();
  std::size_t best = 0;
  for (unsigned t = 0; t < opt.trials; ++t) {
    QVector pt(nvars);
    for (auto& x : pt) x = coord(rng);
    best = std::max(best, rank(evaluate(c, pt)));
  }
  return best;
}

std::size_t invariant_count(const LieAlgebra& g, const SamplingOptions& opt) {
  return g.dimension() - generic_rank(structure_matrix(g), opt);
}

Polynomial xi(std::size_t n, std::size_t k, std::size_t variable_count) {
  if (n < 4 || k > n - 3) throw Error(ErrorCode::IndexOutOfRange, "xi_k needs 0 <= k <= n-3");
  if (variable_count < n) throw Error(ErrorCode::DimensionMismatch, "xi needs at least n variables");
  if (k == 0) return Polynomial::variable(variable_count, 0);
  const auto sign = [](std::size_t j) { return j % 2 ? Rational(-1) : Rational(1); };
  Exponents e(variable_count);
  e[1] = static_cast<std::uint32_t>(k + 1);
  Polynomial p = Polynomial::monomial(e, sign(k) * Rational(static_cast<long>(k)) / factorial(static_cast<unsigned>(k + 1)));
  for (std::size_t j = 0; j < k; ++j) {
    Exponents m(variable_count);
    m[1] += static_cast<std::uint32_t>(j);
    m[k + 1 - j] += 1;
    m[0] += static_cast<std::uint32_t>(k - j);
    p += Polynomial::monomial(m, sign(j) / factorial(static_cast<unsigned>(j)));
  }
  return p;
}

std::string InvariantExpr::to_string(std::span<const std::string> names) const {
  std::string out;
  for (const auto& [index, q] : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + xi(n, index, variable_count).to_string(names) + ")";
    if (q != 1) out += "^(" + q.get_str() + ")";
  }
  const LogPolynomial one(RationalFunction(Polynomial::constant(variable_count, 1)));
  if (factors.empty() || !(log_part == one)) {
    if (!out.empty()) out += " * ";
    out += "[" + log_part.to_string(names) + "]";
  }
  return out;
}

namespace {

std::size_t algebra_dimension(const FamilyLabel& label) { return label.n + outer_count(label.family); }

LogPolynomial unit(std::size_t nvars) { return LogPolynomial(RationalFunction(Polynomial::constant(nvars, 1))); }

InvariantExpr power_product(const FamilyLabel& label, std::vector<std::pair<std::size_t, Rational>> factors) {
  const std::size_t nvars = algebra_dimension(label);
  return InvariantExpr{label.n, nvars, std::move(factors), unit(nvars)};
}

// Log invariant of s(n+1,6):
//   sum_m (-1)^m L^m/m! (A(k-2m+1, m) + sum_j xi_{j+1}/xi_0^{j+2} A(k-2m-1-j, m))
// where A(s, m) sums prod a_{i_t+3} over i_1+...+i_m = s, 0 <= i_t <= k+1.
InvariantExpr s6_invariant(const FamilyLabel& label, std::size_t k) {
  const std::size_t n = label.n;
  const std::size_t nvars = algebra_dimension(label);
  const auto a = [&](std::size_t j) -> Rational {
    return j >= 3 && j <= n - 1 ? label.params.at(j - 3) : Rational(0);
  };
  const std::size_t mmax = (k + 1) / 2;
  const std::size_t smax = k + 1;
  std::vector<std::vector<Rational>> A(mmax + 1, std::vector<Rational>(smax + 1));
  A[0][0] = 1;
  for (std::size_t m = 1; m <= mmax; ++m)
    for (std::size_t s = 0; s <= smax; ++s)
      for (std::size_t i = 0; i <= std::min(s, k + 1); ++i) A[m][s] += a(i + 3) * A[m - 1][s - i];

  std::vector<RationalFunction> coeffs;
  for (std::size_t m = 0; m <= mmax; ++m) {
    RationalFunction c(nvars);
    if (k + 1 >= 2 * m) c = c + RationalFunction(Polynomial::constant(nvars, A[m][k + 1 - 2 * m]));
    if (k >= 2 * m + 1) {
      const std::size_t top = k - 2 * m - 1;
      for (std::size_t j = 0; j <= top; ++j) {
        if (A[m][top - j] == 0) continue;
        Polynomial den = xi(n, 0, nvars).pow(static_cast<unsigned>(j + 2));
        c = c + A[m][top - j] * RationalFunction(xi(n, j + 1, nvars), den);
      }
    }
    const Rational scale = (m % 2 ? Rational(-1) : Rational(1)) / factorial(static_cast<unsigned>(m));
    coeffs.push_back(scale * c);
  }
  return InvariantExpr{n, nvars, {}, LogPolynomial(std::move(coeffs))};
}

}  // namespace

InvariantExpr chi(const FamilyLabel& label, std::size_t k) {
  const std::size_t n = label.n;
  if (n < 4) throw Error(ErrorCode::BadDimension, "n must be at least 4");
  const Rational nn(static_cast<long>(n));
  const Rational kk(static_cast<long>(k));
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (k < lo || k > hi)
      throw Error(ErrorCode::IndexOutOfRange, "invariant index " + std::to_string(k) + " outside " +
                                                  std::to_string(lo) + ".." + std::to_string(hi));
  };
  const auto with_beta = [&](const Rational& beta) {
    if (n - 2 + beta == 0) throw Error(ErrorCode::DivergentExponent, "beta = 2-n makes the exponent diverge; use s(n+1,3)");
    need(1, n - 3);
    const Rational e = -(kk + 1) * (nn - 3 + beta) / (nn - 2 + beta);
    return power_product(label, {{k, Rational(1)}, {0, e}});
  };
  switch (label.family) {
    case Family::Nilradical:
      need(0, n - 3);
      return power_product(label, {{k, Rational(1)}});
    case Family::S1: return with_beta(label.params.at(0));
    case Family::S2: return with_beta(0);
    case Family::S5: return with_beta(1);
    case Family::S3:
      need(1, n - 3);
      if (k == 1) return power_product(label, {{0, Rational(1)}});
      return power_product(label, {{k, Rational(2)}, {1, -(kk + 1)}});
    case Family::S4:
      need(1, n - 3);
      return power_product(label, {{k, Rational(1)}, {0, -(kk + 1)}});
    case Family::S6:
      need(1, n - 3);
      return s6_invariant(label, k);
    case Family::Snp2:
      if (n < 5) need(1, 0);
      need(1, n - 4);
      return power_product(label, {{k + 1, Rational(1)}, {1, -(kk + 2) / 2}});
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

std::vector<InvariantExpr> invariants_of(const FamilyLabel& label) {
  std::vector<InvariantExpr> out;
  const std::size_t n = label.n;
  if (n < 4) throw Error(ErrorCode::BadDimension, "n must be at least 4");
  std::size_t lo = 1, hi = n - 3;
  if (label.family == Family::Nilradical) lo = 0;
  if (label.family == Family::Snp2) hi = n - 4;
  for (std::size_t k = lo; k <= hi; ++k) out.push_back(chi(label, k));
  return out;
}

std::vector<VectorField> truncated_operators(const FamilyLabel& label) {
  const std::size_t n = label.n;
  const std::size_t nvars = algebra_dimension(label);
  const auto e = [&](std::size_t j) { return Polynomial::variable(nvars, j - 1); };
  const auto diagonal = [&](const Rational& alpha, const Rational& beta) {
    std::vector<Polynomial> c(nvars, Polynomial(nvars));
    for (std::size_t k = 1; k <= n - 1; ++k) c[k - 1] = (Rational(static_cast<long>(n - 1 - k)) * alpha + beta) * e(k);
    return VectorField(std::move(c));
  };
  const Rational nn(static_cast<long>(n));
  switch (label.family) {
    case Family::Nilradical: throw Error(ErrorCode::InvalidParameter, "n(n,1) has no truncated operator");
    case Family::S1: return {diagonal(1, label.params.at(0))};
    case Family::S2: return {diagonal(1, 0)};
    case Family::S3: return {diagonal(1, 2 - nn)};
    case Family::S4: return {diagonal(0, 1)};
    case Family::S5: return {diagonal(1, 1)};
    case Family::Snp2: return {diagonal(1, 0), diagonal(0, 1)};
    case Family::S6: {
      std::vector<Polynomial> c(nvars, Polynomial(nvars));
      c[0] = e(1);
      c[1] = e(2);
      for (std::size_t l = 1; l <= n - 3; ++l) {
        Polynomial p = e(l + 2);
        for (std::size_t j = 1; j <= l; ++j) p += label.params.at(l - j) * e(j);
        c[l + 1] = p;
      }
      return {VectorField(std::move(c))};
    }
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

Rational weighted_eigenvalue(const VectorField& op, const Polynomial& p) {
  for (std::size_t v = 0; v < op.variable_count(); ++v) {
    const Polynomial& c = op.coefficient(v);
    if (c.is_zero()) continue;
    const Exponents& lead = c.leading_exponents();
    if (!c.is_monomial() || c.total_degree() != 1 || lead[v] != 1)
      throw Error(ErrorCode::InvalidParameter, "operator is not diagonal");
  }
  const Polynomial image = op.apply(p);
  if (p.is_zero() || image.is_zero()) {
    if (!image.is_zero()) throw Error(ErrorCode::NotEigenvector, "image of zero is nonzero");
    return 0;
  }
  const Rational lambda = image.leading_coefficient() / p.leading_coefficient();
  if (!(image == lambda * p)) throw Error(ErrorCode::NotEigenvector, "polynomial is not an eigenvector");
  return lambda;
}

LogPolynomial annihilation_residual(const VectorField& op, const InvariantExpr& inv) {
  if (op.variable_count() != inv.variable_count)
    throw Error(ErrorCode::DimensionMismatch, "operator and invariant use different variables");
  RationalFunction logdiff(inv.variable_count);
  for (const auto& [index, q] : inv.factors) {
    const Polynomial x = xi(inv.n, index, inv.variable_count);
    logdiff = logdiff + q * RationalFunction(op.apply(x), x);
  }
  const Polynomial x0 = xi(inv.n, 0, inv.variable_count);
  const RationalFunction dL = inv.log_part.degree() > 0 ? RationalFunction(op.apply(x0), x0) : RationalFunction(inv.variable_count);
  return LogPolynomial(logdiff) * inv.log_part + derive(inv.log_part, op, dL);
}

bool verify_annihilation(const std::vector<VectorField>& ops, const InvariantExpr& inv) {
  return std::all_of(ops.begin(), ops.end(), [&](const VectorField& op) { return annihilation_residual(op, inv).is_zero(); });
}

bool verify_annihilation(const std::vector<VectorField>& ops, const Polynomial& p) {
  return std::all_of(ops.begin(), ops.end(), [&](const VectorField& op) { return op.apply(p).is_zero(); });
}

namespace {

struct Jet {
  Rational value;
  QVector grad;
};

Jet jet(const Polynomial& p, const QVector& pt) {
  Jet j{p.evaluate(pt), QVector(pt.size())};
  for (std::size_t a = 0; a < pt.size(); ++a)
    if (p.depends_on(a)) j.grad[a] = derivative(p, a).evaluate(pt);
  return j;
}

Jet jet(const RationalFunction& f, const QVector& pt) {
  const Jet n = jet(f.numerator(), pt);
  const Jet d = jet(f.denominator(), pt);
  if (d.value == 0) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes");
  Jet j{n.value / d.value, QVector(pt.size())};
  for (std::size_t a = 0; a < pt.size(); ++a) j.grad[a] = (n.grad[a] * d.value - n.value * d.grad[a]) / (d.value * d.value);
  return j;
}

// Gradient of an invariant at pt divided by its power-product prefactor.
QVector scaled_gradient(const InvariantExpr& inv, const QVector& pt, const Rational& log_value) {
  const std::size_t nv = pt.size();
  const auto& cs = inv.log_part.coefficients();
  Jet logp{0, QVector(nv)};
  std::vector<Jet> cj;
  for (const auto& c : cs) cj.push_back(jet(c, pt));
  Rational lpow = 1;
  for (std::size_t m = 0; m < cj.size(); ++m, lpow *= log_value) {
    logp.value += cj[m].value * lpow;
    for (std::size_t a = 0; a < nv; ++a) logp.grad[a] += cj[m].grad[a] * lpow;
  }
  if (cj.size() > 1) {
    const Jet x0 = jet(xi(inv.n, 0, inv.variable_count), pt);
    Rational dcoef = 0, lp = 1;
    for (std::size_t m = 1; m < cj.size(); ++m, lp *= log_value) dcoef += Rational(static_cast<long>(m)) * cj[m].value * lp;
    for (std::size_t a = 0; a < nv; ++a) logp.grad[a] += dcoef * x0.grad[a] / x0.value;
  }
  QVector g = logp.grad;
  for (const auto& [index, q] : inv.factors) {
    const Jet x = jet(xi(inv.n, index, inv.variable_count), pt);
    for (std::size_t a = 0; a < nv; ++a) g[a] += q * x.grad[a] / x.value * logp.value;
  }
  return g;
}

}  // namespace

std::size_t functional_independence(const std::vector<InvariantExpr>& invs, const SamplingOptions& opt) {
  if (invs.empty()) return 0;
  const std::size_t nvars = invs.front().variable_count;
  const std::size_t n = invs.front().n;
  std::vector<std::size_t> guarded;
  for (const auto& inv : invs) {
    if (inv.variable_count != nvars || inv.n != n)
      throw Error(ErrorCode::DimensionMismatch, "invariants over different variables");
    if (inv.log_part.degree() > 0) guarded.push_back(0);
    for (const auto& f : inv.factors) guarded.push_back(f.first);
  }
  std::sort(guarded.begin(), guarded.end());
  guarded.erase(std::unique(guarded.begin(), guarded.end()), guarded.end());

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> num(-opt.bound, opt.bound);
  std::uniform_int_distribution<long> den(1, 16);
  const auto draw = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  std::size_t best = 0;
  bool any = false;
  for (unsigned t = 0; t < opt.trials; ++t) {
    QVector pt(nvars);
    for (auto& x : pt) x = draw();
    const Rational log_value = draw();
    if (std::any_of(guarded.begin(), guarded.end(), [&](std::size_t i) { return xi(n, i, nvars).evaluate(pt) == 0; }))
      continue;
    QMatrix jac(invs.size(), nvars);
    try {
      for (std::size_t i = 0; i < invs.size(); ++i) {
        const QVector g = scaled_gradient(invs[i], pt, log_value);
        for (std::size_t a = 0; a < nvars; ++a) jac(i, a) = g[a];
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroDenominator) continue;
      throw;
    }
    any = true;
    best = std::max(best, rank(jac));
  }
  if (!any) throw Error(ErrorCode::DegeneratePoint, "every sample point hit a zero of an invariant factor");
  return best;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> Report::witnesses() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + ": " + c.witness);
  return out;
}

Report verify_theorem(const FamilyLabel& label_in, FieldTag field, const SamplingOptions& opt) {
  Report r;
  r.label = validated(label_in, field);
  r.field = field;
  const FamilyLabel& label = r.label;
  const LieAlgebra g = build_algebra(label, field);
  r.variables = g.labels();
  const std::size_t dim = g.dimension();

  r.rank_c = generic_rank(structure_matrix(g), opt);
  r.count_computed = dim - r.rank_c;
  r.count_expected = expected_invariant_count(label);
  r.invariants = invariants_of(label);

  r.checks.push_back({"rank-even", r.rank_c % 2 == 0, "rank(C) = " + std::to_string(r.rank_c)});
  r.checks.push_back({"count", r.count_computed == r.count_expected,
                      "computed " + std::to_string(r.count_computed) + ", expected " + std::to_string(r.count_expected)});
  r.checks.push_back({"invariant-list", r.invariants.size() == r.count_computed,
                      "built " + std::to_string(r.invariants.size()) + " invariants"});

  std::vector<std::pair<std::string, VectorField>> ops;
  const auto coadjoint = coadjoint_operators(g);
  for (std::size_t k = 0; k < dim; ++k) ops.emplace_back("ad*(" + g.labels()[k] + ")", coadjoint[k]);
  if (label.family != Family::Nilradical) {
    const auto trunc = truncated_operators(label);
    for (std::size_t i = 0; i < trunc.size(); ++i) ops.emplace_back("truncated[" + std::to_string(i + 1) + "]", trunc[i]);
  }

  bool all_annihilated = true;
  std::string ann_witness;
  bool outer_free = true;
  for (std::size_t i = 0; i < r.invariants.size(); ++i) {
    const auto& inv = r.invariants[i];
    bool ok = true;
    for (const auto& [name, op] : ops) {
      const LogPolynomial res = annihilation_residual(op, inv);
      if (!res.is_zero()) {
        ok = false;
        if (ann_witness.empty())
          ann_witness = "invariant " + std::to_string(i) + " under " + name + " leaves " + res.to_string(r.variables);
      }
    }
    r.annihilation.push_back(ok);
    all_annihilated = all_annihilated && ok;
    for (const auto& [index, q] : inv.factors)
      for (std::size_t v = label.n; v < dim; ++v) outer_free = outer_free && !xi(label.n, index, dim).depends_on(v);
    for (const auto& c : inv.log_part.coefficients())
      for (std::size_t v = label.n; v < dim; ++v)
        outer_free = outer_free && !c.numerator().depends_on(v) && !c.denominator().depends_on(v);
  }
  r.checks.push_back({"annihilation", all_annihilated, ann_witness});
  r.checks.push_back({"outer-variables-absent", outer_free, "an invariant depends on an outer coordinate"});

  r.independence_rank = functional_independence(r.invariants, opt);
  r.checks.push_back({"independence", r.independence_rank == r.invariants.size(),
                      "Jacobian rank " + std::to_string(r.independence_rank) + " for " +
                          std::to_string(r.invariants.size()) + " invariants"});
  return r;
}

}  // namespace solvlie
