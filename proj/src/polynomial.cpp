#include "solvlie/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "solvlie/error.hpp"

namespace solvlie {

namespace {

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.variable_count() != b.variable_count())
    throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable sets");
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t variable_count, const Rational& c) {
  Polynomial p(variable_count);
  p.add_term(Exponents(variable_count, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variable_count, std::size_t index) {
  if (index >= variable_count) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponents e(variable_count, 0);
  e[index] = 1;
  Polynomial p(variable_count);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Polynomial::depends_on(std::size_t var) const { return degree_in(var) > 0; }

bool Polynomial::is_homogeneous(unsigned degree) const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) != degree) return false;
  return true;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= solvlie::pow(point[i], static_cast<long>(e[i]));
    sum += t;
  }
  return sum;
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << '*' << names[i];
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const {
  const auto names = default_variable_names(nvars_);
  return to_string(names);
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.variable_count()) throw Error(ErrorCode::IndexOutOfRange, "derivative variable out of range");
  Polynomial r(p.variable_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero polynomial");
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Polynomial q(a.variable_count());
  Polynomial rem = a;
  Exponents shift(a.variable_count());
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    Polynomial t = Polynomial::monomial(shift, rem.leading_coefficient() / cb);
    q += t;
    rem -= t * b;
  }
  return q;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coefficient();
  return inv * p;
}

namespace {

// Coefficients of var^d, d = 0..deg, as polynomials free of var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(p.degree_in(var) + 1, Polynomial(p.variable_count()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.variable_count());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, var));
  if (!q) throw Error(ErrorCode::Internal, "content does not divide polynomial");
  return *q;
}

// lc(b)^(deg a - deg b + 1) * a reduced modulo b in var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lcb = coefficients_in(b, var).back();
  int pending = static_cast<int>(a.degree_in(var)) - static_cast<int>(db) + 1;
  while (!a.is_zero()) {
    const unsigned da = a.degree_in(var);
    if (da < db) break;
    const Polynomial lca = coefficients_in(a, var).back();
    Exponents shift(a.variable_count(), 0);
    shift[var] = da - db;
    a = lcb * a - lca * Polynomial::monomial(shift, 1) * b;
    --pending;
  }
  if (pending > 0) a = a * lcb.pow(static_cast<unsigned>(pending));
  return a;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::Internal, "inexact division in subresultant sequence");
  return *q;
}

using Univariate = std::vector<Rational>;  // coefficient of x^d at index d

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Degree of the univariate gcd over Q.
std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const Rational f = a.back() / b.back();
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

Univariate image(const Polynomial& p, std::size_t var, const std::vector<Rational>& point) {
  Univariate u(p.degree_in(var) + 1);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) t *= pow(point[i], static_cast<long>(e[i]));
    u[e[var]] += t;
  }
  return u;
}

// Upper bound for deg_var gcd(a, b): the degree of the gcd of images at a
// point where neither leading coefficient in var vanishes.
std::size_t gcd_degree_bound(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const Polynomial la = coefficients_in(a, var).back(), lb = coefficients_in(b, var).back();
  std::vector<Rational> point(a.variable_count());
  for (long salt = 0;; ++salt) {
    for (std::size_t i = 0; i < point.size(); ++i)
      point[i] = static_cast<long>((i * 7 + 3 + salt * 13) % 29) + 2 + salt;
    if (la.evaluate(point) != 0 && lb.evaluate(point) != 0)
      return univariate_gcd_degree(image(a, var, point), image(b, var, point));
  }
}

Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& p) {
  Exponents e = mono.leading_exponents();
  for (const auto& [pe, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], pe[i]);
  return Polynomial::monomial(e, 1);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  const std::size_t n = a.variable_count();
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, 1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (auto q = divide_exact(a, b)) return make_monic(b);
  if (auto q = divide_exact(b, a)) return make_monic(a);

  std::size_t var = n;
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = a.depends_on(i), in_b = b.depends_on(i);
    if (in_a && !in_b) return gcd(content_in(a, i), b);
    if (in_b && !in_a) return gcd(a, content_in(b, i));
    if (in_a && in_b && var == n) var = i;
  }

  bool coprime = true;
  for (std::size_t i = 0; i < n && coprime; ++i)
    if (a.depends_on(i) && gcd_degree_bound(a, b, i) > 0) coprime = false;
  if (coprime) return Polynomial::constant(n, 1);
  if (gcd_degree_bound(a, b, var) == 0) return gcd(content_in(a, var), content_in(b, var));

  const Polynomial ca = content_in(a, var), cb = content_in(b, var);
  const Polynomial cont = gcd(ca, cb);
  Polynomial p = exact_quotient(a, ca);
  Polynomial q = exact_quotient(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  // Subresultant sequence: every division below is exact.
  Polynomial g = Polynomial::constant(n, 1), h = Polynomial::constant(n, 1);
  while (q.degree_in(var) > 0) {
    const unsigned delta = p.degree_in(var) - q.degree_in(var);
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    p = std::move(q);
    q = exact_quotient(r, g * h.pow(delta));
    g = coefficients_in(p, var).back();
    h = delta == 0 ? h : exact_quotient(g.pow(delta), h.pow(delta - 1));
  }
  if (q.degree_in(var) == 0) return make_monic(cont);
  return make_monic(cont * primitive_part_in(q, var));
}

}  // namespace solvlie
