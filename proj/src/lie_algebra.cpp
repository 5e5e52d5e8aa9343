#include "solvlie/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "solvlie/error.hpp"
#include "solvlie/polynomial.hpp"

namespace solvlie {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const BracketTable& brackets)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidParameter, "duplicate basis label '" + l + "'");
  for (const auto& [key, v] : brackets) {
    auto [a, b] = key;
    if (a >= n || b >= n) throw Error(ErrorCode::IndexOutOfRange, "bracket index out of range");
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket vector has wrong length");
    if (a == b) {
      if (!is_zero(v)) throw Error(ErrorCode::InvalidParameter, "[x,x] must vanish");
      continue;
    }
    if (is_zero(v)) continue;
    if (a < b) {
      table_[{a, b}] = v;
    } else {
      QVector neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -v[i];
      table_[{b, a}] = neg;
    }
  }
  dense_.assign(n * n, QVector(n));
  for (const auto& [key, v] : table_) {
    auto [a, b] = key;
    dense_[a * n + b] = v;
    for (std::size_t i = 0; i < n; ++i) dense_[b * n + a][i] = -v[i];
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n, const std::string& stem) {
  return LieAlgebra(default_variable_names(n, stem), {});
}

std::size_t LieAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::ParseError, "unknown basis label '" + std::string(label) + "'");
}

QVector LieAlgebra::basis_vector(std::size_t a) const {
  QVector v(dimension());
  v.at(a) = 1;
  return v;
}

QVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dimension();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket operand has wrong length");
  QVector out(n);
  for (const auto& [key, v] : table_) {
    auto [a, b] = key;
    const Rational coef = x[a] * y[b] - x[b] * y[a];
    if (coef == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) out[i] += coef * v[i];
  }
  return out;
}

QMatrix LieAlgebra::adjoint(std::span<const Rational> x) const {
  const std::size_t n = dimension();
  QMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const QVector col = bracket(x, basis_vector(a));
    for (std::size_t i = 0; i < n; ++i) m(a, i) = col[i];
  }
  return m;
}

QMatrix LieAlgebra::adjoint_of_basis(std::size_t a) const { return adjoint(basis_vector(a)); }

LieAlgebra LieAlgebra::change_basis(const QMatrix& p) const {
  const std::size_t n = dimension();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change has wrong shape");
  const QMatrix pinv = inverse(p);
  BracketTable t;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const QVector w = bracket(p.row(a), p.row(b));
      if (is_zero(w)) continue;
      t[{a, b}] = row_times(w, pinv);
    }
  return LieAlgebra(labels_, t);
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  const RrefResult r = rref(QMatrix::from_rows(vectors, ambient));
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  return span(ambient, QMatrix::identity(ambient).row_list());
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector outside ambient space");
  QVector rest(v.begin(), v.end());
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    const Rational c = rest[pivot];
    if (c == 0) continue;
    for (std::size_t i = 0; i < ambient_; ++i) rest[i] -= c * b[i];
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

QVector Subspace::coordinates(std::span<const Rational> v) const {
  QVector coords;
  QVector rebuilt(ambient_);
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    coords.push_back(v[pivot]);
    for (std::size_t i = 0; i < ambient_; ++i) rebuilt[i] += v[pivot] * b[i];
  }
  if (!std::equal(rebuilt.begin(), rebuilt.end(), v.begin(), v.end()))
    throw Error(ErrorCode::InvalidParameter, "vector is not in the subspace");
  return coords;
}

// ---------------------------------------------------------------------------

std::vector<std::array<std::size_t, 3>> jacobi_violations(const LieAlgebra& g) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = g.dimension();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const QVector ea = g.basis_vector(a), eb = g.basis_vector(b), ec = g.basis_vector(c);
        QVector s = g.bracket(g.bracket(ea, eb), ec);
        const QVector t = g.bracket(g.bracket(eb, ec), ea);
        const QVector u = g.bracket(g.bracket(ec, ea), eb);
        for (std::size_t i = 0; i < n; ++i) s[i] += t[i] + u[i];
        if (!is_zero(s)) out.push_back({a, b, c});
      }
  return out;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<QVector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      QVector v = g.bracket(x, y);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(g.dimension(), vs);
}

namespace {

template <typename Step>
std::vector<Subspace> descending_series(const LieAlgebra& g, Step step) {
  std::vector<Subspace> out{Subspace::whole(g.dimension())};
  while (out.back().dimension() > 0) {
    Subspace next = step(out.back());
    const bool repeated = next == out.back();
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

// {x : [x, g] lies in z}.
Subspace preimage_of_center(const LieAlgebra& g, const Subspace& z) {
  const std::size_t n = g.dimension();
  std::vector<QVector> annihilator = z.dimension() == 0
                                         ? QMatrix::identity(n).row_list()
                                         : nullspace_basis(QMatrix::from_rows(z.basis(), n));
  std::vector<QVector> rows;
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& w : annihilator) {
      QVector row(n);
      for (std::size_t a = 0; a < n; ++a) {
        const QVector& s = g.structure(a, b);
        for (std::size_t i = 0; i < n; ++i) row[a] += w[i] * s[i];
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, nullspace_basis(QMatrix::from_rows(rows, n)));
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  return descending_series(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dimension());
  return descending_series(g, [&](const Subspace& s) { return bracket_span(g, s, whole); });
}

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  std::vector<Subspace> out{center(g)};
  if (out.back().dimension() == 0) return out;
  while (out.back().dimension() < n) {
    Subspace next = preimage_of_center(g, out.back());
    const bool repeated = next == out.back();
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

std::vector<std::size_t> dimensions(const std::vector<Subspace>& series) {
  std::vector<std::size_t> d;
  for (const auto& s : series) d.push_back(s.dimension());
  return d;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& h) {
  const std::size_t n = g.dimension();
  std::vector<QVector> rows;
  for (const auto& y : h.basis())
    for (std::size_t m = 0; m < n; ++m) {
      QVector row(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
          if (y[j] != 0) row[a] += y[j] * g.structure(a, j)[m];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, nullspace_basis(QMatrix::from_rows(rows, n)));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dimension())); }

SeriesSignature series_signature(const LieAlgebra& g) {
  return {dimensions(derived_series(g)), dimensions(lower_central_series(g)),
          dimensions(upper_central_series(g))};
}

std::string format_dimensions(const std::vector<std::size_t>& dims, bool mark_stabilized) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  const bool stabilized = dims.size() >= 2 && dims.back() == dims[dims.size() - 2];
  if (mark_stabilized && stabilized) os << ",...";
  os << ']';
  return os.str();
}

Nilpotency nilpotency(const LieAlgebra& g) {
  const auto cs = lower_central_series(g);
  if (cs.back().dimension() != 0) return {false, 0};
  return {true, cs.size() - 1};
}

Nilpotency solvability(const LieAlgebra& g) {
  const auto ds = derived_series(g);
  if (ds.back().dimension() != 0) return {false, 0};
  return {true, ds.size() - 1};
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dimension()), s));
}

bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s) {
  Subspace cur = s;
  for (std::size_t k = 0; k <= s.dimension(); ++k) {
    if (cur.dimension() == 0) return true;
    cur = bracket_span(g, cur, s);
  }
  return cur.dimension() == 0;
}

// ---------------------------------------------------------------------------

bool is_derivation(const LieAlgebra& g, const QMatrix& d) {
  const std::size_t n = g.dimension();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorCode::DimensionMismatch, "derivation has wrong shape");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const QVector lhs = row_times(g.structure(a, b), d);
      QVector rhs = g.bracket(d.row(a), g.basis_vector(b));
      const QVector r2 = g.bracket(g.basis_vector(a), d.row(b));
      for (std::size_t i = 0; i < n; ++i) rhs[i] += r2[i];
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

QMatrix reshape(const QVector& v, std::size_t n) { return QMatrix(n, n, v); }

QVector flatten(const QMatrix& m) { return QVector(m.entries().begin(), m.entries().end()); }

}  // namespace

std::vector<QMatrix> derivation_space(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  const auto unknown = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<QVector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t m = 0; m < n; ++m) {
        // sum_c c^c_ab D_cm - sum_d D_ad c^m_db - sum_d D_bd c^m_ad = 0
        QVector row(n * n);
        const QVector& cab = g.structure(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (cab[c] != 0) row[unknown(c, m)] += cab[c];
        for (std::size_t d = 0; d < n; ++d) {
          const Rational& c1 = g.structure(d, b)[m];
          if (c1 != 0) row[unknown(a, d)] -= c1;
          const Rational& c2 = g.structure(a, d)[m];
          if (c2 != 0) row[unknown(b, d)] -= c2;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<QMatrix> out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) {
      QVector v(n * n);
      v[i] = 1;
      out.push_back(reshape(v, n));
    }
    return out;
  }
  for (const auto& v : nullspace_basis(QMatrix::from_rows(rows, n * n))) out.push_back(reshape(v, n));
  return out;
}

std::vector<QMatrix> inner_derivation_space(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  std::vector<QVector> flat;
  for (std::size_t a = 0; a < n; ++a) flat.push_back(flatten(g.adjoint_of_basis(a)));
  std::vector<QMatrix> out;
  if (n == 0) return out;
  const RrefResult r = rref(QMatrix::from_rows(flat, n * n));
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(reshape(r.reduced.row(i), n));
  return out;
}

std::size_t span_dimension(const std::vector<QMatrix>& mats) {
  if (mats.empty()) return 0;
  std::vector<QVector> flat;
  for (const auto& m : mats) flat.push_back(flatten(m));
  return rank(QMatrix::from_rows(flat, mats.front().rows() * mats.front().cols()));
}

QMatrix restricted_adjoint(const LieAlgebra& g, const Subspace& ideal, std::span<const Rational> x) {
  const std::size_t k = ideal.dimension();
  QMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const QVector img = g.bracket(x, ideal.basis()[i]);
    if (!ideal.contains(img)) throw Error(ErrorCode::NotAnIdeal, "bracket leaves the ideal");
    const QVector c = ideal.coordinates(img);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = c[j];
  }
  return m;
}

bool is_nilpotent_matrix(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of non-square matrix");
  QMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

namespace {

bool lower_triangular(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

Rational trace(const QMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Interpolates the univariate polynomial of degree <= xs.size()-1.
Polynomial interpolate(const QVector& xs, const QVector& ys) {
  Polynomial result(1);
  const Polynomial s = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = Polynomial::constant(1, ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = basis * (s - Polynomial::constant(1, xs[j]));
      basis *= Rational(1) / (xs[i] - xs[j]);
    }
    result += basis;
  }
  return result;
}

}  // namespace

bool nil_independent(const std::vector<QMatrix>& mats) {
  if (mats.empty()) return true;
  const std::size_t k = mats.front().rows();
  const bool lower = std::all_of(mats.begin(), mats.end(), lower_triangular);
  const bool upper = std::all_of(mats.begin(), mats.end(), [](const QMatrix& m) {
    return lower_triangular(m.transpose());
  });
  if (lower || upper) {
    // Triangular combinations are nilpotent exactly when the diagonal vanishes.
    std::vector<QVector> diags;
    for (const auto& m : mats) {
      QVector d(k);
      for (std::size_t i = 0; i < k; ++i) d[i] = m(i, i);
      diags.push_back(std::move(d));
    }
    return rank(QMatrix::from_rows(diags, k)) == mats.size();
  }
  if (mats.size() == 1) return !is_nilpotent_matrix(mats[0]);
  if (mats.size() > 2)
    throw Error(ErrorCode::InvalidParameter, "nil-independence of more than two non-triangular matrices is not supported");
  if (is_nilpotent_matrix(mats[0])) return false;
  // s*A + B is nilpotent iff tr((sA+B)^j) = 0 for j = 1..k; look for a
  // common root of these polynomials in s.
  Polynomial common(1);
  for (std::size_t j = 1; j <= k; ++j) {
    QVector xs, ys;
    for (std::size_t t = 0; t <= j; ++t) {
      const Rational s(static_cast<long>(t));
      const QMatrix c = s * mats[0] + mats[1];
      QMatrix p = c;
      for (std::size_t e = 1; e < j; ++e) p = p * c;
      xs.push_back(s);
      ys.push_back(trace(p));
    }
    common = gcd(common, interpolate(xs, ys));
    if (!common.is_zero() && common.is_constant()) return true;
  }
  return false;
}

bool nil_independent(const LieAlgebra& g, const Subspace& ideal, const std::vector<QVector>& outer) {
  if (!is_ideal(g, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not an ideal");
  std::vector<QMatrix> mats;
  for (const auto& x : outer) mats.push_back(restricted_adjoint(g, ideal, x));
  return nil_independent(mats);
}

bool diagonal_rule_holds(std::size_t n, const QMatrix& d, int shift) {
  // 1-based (i, j) as in the usual matrix notation.
  const auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return d(i - 1, j - 1); };
  const Rational alpha = at(n, n), beta = at(n - 1, n - 1);
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const long coef = static_cast<long>(n) - static_cast<long>(i) + shift;
    if (at(i, i) != Rational(coef) * alpha + beta) return false;
  }
  return true;
}

bool verify_derivation_pattern(std::size_t n, const std::vector<QMatrix>& basis) {
  const auto check = [n](const QMatrix& d) {
    if (d.rows() != n || d.cols() != n) return false;
    if (!lower_triangular(d)) return false;
    if (!diagonal_rule_holds(n, d, -1)) return false;
    for (std::size_t j = 2; j <= n - 1; ++j)
      for (std::size_t i = 1; i < j; ++i)
        if (d(j - 1, i - 1) != d(j - i, 0)) return false;
    return true;
  };
  return std::all_of(basis.begin(), basis.end(), check);
}

}  // namespace solvlie
