#include "solvlie/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "solvlie/error.hpp"
#include "solvlie/polynomial.hpp"

namespace solvlie {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

struct NameEntry {
  Family family;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {Family::Nilradical, "n(n,1)"}, {Family::S1, "s(n+1,1)"}, {Family::S2, "s(n+1,2)"},
    {Family::S3, "s(n+1,3)"},       {Family::S4, "s(n+1,4)"}, {Family::S5, "s(n+1,5)"},
    {Family::S6, "s(n+1,6)"},       {Family::Snp2, "s(n+2)"},
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorCode::ParseError, "expected a bracketed list, got '" + s + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<Rational> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Rational q(long v) { return Rational(v); }

}  // namespace

FieldTag parse_field(std::string_view text) {
  const std::string s = trim(text);
  if (s == "R" || s == "r" || s == "real") return FieldTag::Real;
  if (s == "C" || s == "c" || s == "complex") return FieldTag::Complex;
  throw Error(ErrorCode::ParseError, "field must be R or C, got '" + s + "'");
}

const char* to_string(FieldTag f) noexcept { return f == FieldTag::Real ? "R" : "C"; }

const char* family_name(Family f) noexcept {
  for (const auto& e : kNames)
    if (e.family == f) return e.name;
  return "?";
}

std::size_t outer_count(Family f) noexcept {
  switch (f) {
    case Family::Nilradical: return 0;
    case Family::Snp2: return 2;
    default: return 1;
  }
}

FamilyLabel parse_family_label(std::string_view text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == ':') {
        parts.push_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(trim(cur));
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw Error(ErrorCode::ParseError, "family label must look like 's(n+1,1):6:beta=3/2', got '" + std::string(text) + "'");
  FamilyLabel label;
  bool found = false;
  for (const auto& e : kNames)
    if (parts[0] == e.name) {
      label.family = e.family;
      found = true;
    }
  if (!found) throw Error(ErrorCode::ParseError, "unknown family '" + parts[0] + "'");
  if (parts[1].empty() || !std::all_of(parts[1].begin(), parts[1].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::ParseError, "bad dimension '" + parts[1] + "'");
  label.n = static_cast<std::size_t>(std::stoul(parts[1]));
  if (parts.size() == 3) {
    const auto eq = parts[2].find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "parameter must be key=value");
    const std::string key = trim(parts[2].substr(0, eq));
    const std::string value = parts[2].substr(eq + 1);
    if (key == "beta" && label.family == Family::S1) {
      label.params = {parse_rational(value)};
    } else if (key == "a" && label.family == Family::S6) {
      label.params = parse_rational_list(value);
    } else {
      throw Error(ErrorCode::ParseError, "parameter '" + key + "' does not apply to " + parts[0]);
    }
  }
  return label;
}

std::string to_string(const FamilyLabel& label) {
  std::string s = std::string(family_name(label.family)) + ":" + std::to_string(label.n);
  if (label.family == Family::S1 && label.params.size() == 1) s += ":beta=" + label.params[0].get_str();
  if (label.family == Family::S6) {
    s += ":a=[";
    for (std::size_t i = 0; i < label.params.size(); ++i) s += (i ? "," : "") + label.params[i].get_str();
    s += "]";
  }
  return s;
}

FamilyLabel validated(const FamilyLabel& label, FieldTag field) {
  const std::size_t n = label.n;
  if (n == 3)
    throw Error(ErrorCode::BadDimension, "n(3,1) is isomorphic to the Heisenberg algebra h(1); n must be at least 4");
  if (n < 4) throw Error(ErrorCode::BadDimension, "n must be at least 4");
  const Rational nn(static_cast<long>(n));
  FamilyLabel out = label;
  switch (label.family) {
    case Family::S1: {
      if (label.params.size() != 1) throw Error(ErrorCode::InvalidParameter, "s(n+1,1) needs beta");
      const Rational& beta = label.params[0];
      if (beta == 0) throw Error(ErrorCode::InvalidParameter, "beta = 0 is the algebra s(n+1,2)");
      if (beta == nn - 2) throw Error(ErrorCode::ExcludedParameter, "beta = n-2 is excluded from s(n+1,1)");
      if (beta == 2 - nn) return FamilyLabel{Family::S3, n, {}};
      return out;
    }
    case Family::S6: {
      if (label.params.size() != n - 3)
        throw Error(ErrorCode::InvalidParameter, "s(n+1,6) needs a_3..a_{n-1} (" + std::to_string(n - 3) + " values)");
      const auto& a = label.params;
      const auto first = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
      if (first == a.end()) throw Error(ErrorCode::InvalidParameter, "all a_j = 0 is the algebra s(n+1,4)");
      if (field == FieldTag::Complex) {
        if (*first != 1) throw Error(ErrorCode::InvalidParameter, "over C the first nonzero a_j must be 1");
      } else {
        // a[i] is a_{i+3}; even j means odd i.
        std::optional<Rational> first_even;
        for (std::size_t i = 1; i < a.size(); i += 2)
          if (a[i] != 0) {
            first_even = a[i];
            break;
          }
        if (first_even && *first_even != 1)
          throw Error(ErrorCode::InvalidParameter, "over R the first nonzero even-index a_j must be 1");
        if (!first_even && abs(*first) != 1)
          throw Error(ErrorCode::InvalidParameter, "over R the first nonzero odd-index a_j must be +1 or -1");
      }
      return out;
    }
    default:
      if (!label.params.empty()) throw Error(ErrorCode::InvalidParameter, std::string(family_name(label.family)) + " takes no parameters");
      return out;
  }
}

LieAlgebra build_nilradical(std::size_t n) {
  validated(FamilyLabel{Family::Nilradical, n, {}}, FieldTag::Complex);
  LieAlgebra::BracketTable t;
  for (std::size_t k = 2; k <= n - 1; ++k) {
    QVector v(n);
    v[k - 2] = 1;
    t[{k - 1, n - 1}] = v;
  }
  return LieAlgebra(default_variable_names(n, "e"), t);
}

QMatrix jordan_block(std::size_t n) {
  QMatrix m(n - 1, n - 1);
  for (std::size_t r = 1; r < n - 1; ++r) m(r, r - 1) = 1;
  return m;
}

bool kernel_in_image(const QMatrix& m) {
  // Row convention x -> x m: the kernel is the left null space.
  const Subspace ker = Subspace::span(m.rows(), nullspace_basis(m.transpose()));
  const Subspace im = Subspace::span(m.cols(), m.row_list());
  return im.contains(ker);
}

QMatrix canonical_derivation(std::size_t n, const Rational& alpha, const Rational& beta,
                             const std::vector<Rational>& a) {
  if (a.size() != n - 2) throw Error(ErrorCode::InvalidParameter, "canonical derivation needs a_3..a_n");
  QMatrix d(n, n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return d(i - 1, j - 1); };
  for (std::size_t j = 1; j <= n - 1; ++j) at(j, j) = q(static_cast<long>(n - 1 - j)) * alpha + beta;
  at(n, n) = alpha;
  for (std::size_t k = 3; k <= n - 1; ++k)
    for (std::size_t l = 1; l + 2 <= k; ++l) at(k, l) = a[k - l + 1 - 3];
  at(n, n - 1) = a[n - 3];
  return d;
}

CanonicalParameters canonical_parameters(std::size_t n, const QMatrix& d) {
  CanonicalParameters p;
  p.alpha = d(n - 1, n - 1);
  p.beta = d(n - 2, n - 2);
  for (std::size_t k = 3; k <= n - 1; ++k) p.a.push_back(d(k - 1, 0));
  p.a.push_back(d(n - 1, n - 2));
  return p;
}

bool is_canonical_shape(std::size_t n, const QMatrix& d) {
  if (d.rows() != n || d.cols() != n) return false;
  const auto p = canonical_parameters(n, d);
  return d == canonical_derivation(n, p.alpha, p.beta, p.a);
}

QVector inner_part(std::size_t n, const QMatrix& d) {
  const LieAlgebra nil = build_nilradical(n);
  // Positions zeroed by the canonical shape: (2,1) and (n,1..n-2), 1-based.
  std::vector<std::pair<std::size_t, std::size_t>> pos{{1, 0}};
  for (std::size_t c = 0; c + 2 < n; ++c) pos.emplace_back(n - 1, c);
  QMatrix sys(n - 1, n - 1);
  QVector rhs(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    const QMatrix ad = nil.adjoint_of_basis(j);
    for (std::size_t r = 0; r < pos.size(); ++r) sys(r, j - 1) = ad(pos[r].first, pos[r].second);
  }
  for (std::size_t r = 0; r < pos.size(); ++r) rhs[r] = d(pos[r].first, pos[r].second);
  const QVector c = solve(sys, rhs);
  QVector z(n);
  for (std::size_t j = 1; j < n; ++j) z[j] = c[j - 1];
  return z;
}

QMatrix reduce_to_canonical(std::size_t n, const QMatrix& d) {
  const LieAlgebra nil = build_nilradical(n);
  if (!is_derivation(nil, d)) throw Error(ErrorCode::NotADerivation, "matrix is not a derivation of n(n,1)");
  QMatrix r = d - nil.adjoint(inner_part(n, d));
  if (!is_canonical_shape(n, r)) throw Error(ErrorCode::Internal, "reduction did not reach canonical shape");
  return r;
}

namespace {

std::vector<std::string> extension_labels(std::size_t n, std::size_t p) {
  auto labels = default_variable_names(n, "e");
  if (p == 1) labels.push_back("f");
  for (std::size_t i = 0; p > 1 && i < p; ++i) labels.push_back("f" + std::to_string(i + 1));
  return labels;
}

QVector flatten(const QMatrix& m) { return QVector(m.entries().begin(), m.entries().end()); }

}  // namespace

LieAlgebra build_extension(const ExtensionSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t p = spec.derivations.size();
  const LieAlgebra nil = build_nilradical(n);
  if (p < 1 || p > 2) throw Error(ErrorCode::InvalidParameter, "an extension needs one or two derivations");
  for (const auto& d : spec.derivations) {
    if (d.rows() != n || d.cols() != n) throw Error(ErrorCode::DimensionMismatch, "derivation must be n x n");
    if (!is_derivation(nil, d)) throw Error(ErrorCode::NotADerivation, "matrix is not a derivation of n(n,1)");
  }
  const std::size_t dim = n + p;
  LieAlgebra::BracketTable t;
  for (const auto& [key, v] : nil.table()) {
    QVector w(v);
    w.resize(dim);
    t[key] = w;
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      QVector w = spec.derivations[i].row(a);
      w.resize(dim);
      t[{n + i, a}] = w;
    }
  if (p == 2) {
    const QMatrix& d1 = spec.derivations[0];
    const QMatrix& d2 = spec.derivations[1];
    const QMatrix k = d2 * d1 - d1 * d2;
    QMatrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const QVector col = flatten(nil.adjoint_of_basis(j));
      for (std::size_t r = 0; r < n * n; ++r) sys(r, j) = col[r];
    }
    auto z = particular_solution(sys, flatten(k));
    if (!z) throw Error(ErrorCode::CommutatorNotInner, "commutator of the derivations is not inner");
    (*z)[0] += spec.gamma;
    z->resize(dim);
    t[{n, n + 1}] = *z;
  } else if (spec.gamma != 0) {
    throw Error(ErrorCode::InvalidParameter, "gamma needs two outer elements");
  }
  LieAlgebra g(extension_labels(n, p), t);
  if (!jacobi_violations(g).empty()) throw Error(ErrorCode::Internal, "extension violates the Jacobi identity");
  return g;
}

ExtensionSpec extract_extension(const LieAlgebra& g, std::size_t n) {
  if (g.dimension() <= n) throw Error(ErrorCode::InvalidParameter, "algebra has no outer elements");
  const std::size_t p = g.dimension() - n;
  ExtensionSpec spec{n, {}, 0};
  for (std::size_t i = 0; i < p; ++i) {
    QMatrix d(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const QVector& v = g.structure(n + i, a);
      for (std::size_t b = n; b < g.dimension(); ++b)
        if (v[b] != 0) throw Error(ErrorCode::InvalidParameter, "[f,e] leaves the nilradical");
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[b];
    }
    spec.derivations.push_back(std::move(d));
  }
  if (p == 2) spec.gamma = g.structure(n, n + 1)[0];
  return spec;
}

ExtensionSpec extension_of(const FamilyLabel& label) {
  const std::size_t n = label.n;
  const Rational nn(static_cast<long>(n));
  const std::vector<Rational> zeros(n - 2);
  ExtensionSpec spec{n, {}, 0};
  auto add = [&](const Rational& alpha, const Rational& beta, const std::vector<Rational>& a) {
    spec.derivations.push_back(canonical_derivation(n, alpha, beta, a));
  };
  switch (label.family) {
    case Family::Nilradical: throw Error(ErrorCode::InvalidParameter, "n(n,1) is not an extension");
    case Family::S1: add(1, label.params.at(0), zeros); break;
    case Family::S2: add(1, 0, zeros); break;
    case Family::S3: add(1, 2 - nn, zeros); break;
    case Family::S4: add(0, 1, zeros); break;
    case Family::S5: {
      auto a = zeros;
      a.back() = 1;
      add(1, 1, a);
      break;
    }
    case Family::S6: {
      auto a = label.params;
      a.push_back(0);
      add(0, 1, a);
      break;
    }
    case Family::Snp2:
      add(1, 0, zeros);
      add(0, 1, zeros);
      break;
  }
  return spec;
}

LieAlgebra build_solvable(const FamilyLabel& label, FieldTag field) {
  const FamilyLabel v = validated(label, field);
  if (v.family == Family::Nilradical) throw Error(ErrorCode::InvalidParameter, "n(n,1) is nilpotent, not solvable");
  return build_extension(extension_of(v));
}

LieAlgebra build_algebra(const FamilyLabel& label, FieldTag field) {
  if (label.family == Family::Nilradical) {
    validated(label, field);
    return build_nilradical(label.n);
  }
  return build_solvable(label, field);
}

SeriesSignature expected_signature(const FamilyLabel& label) {
  const std::size_t n = label.n;
  SeriesSignature s;
  switch (label.family) {
    case Family::Nilradical:
      s.derived = {n, n - 2, 0};
      s.lower_central = {n};
      for (std::size_t k = n - 2; k >= 1; --k) s.lower_central.push_back(k);
      s.lower_central.push_back(0);
      for (std::size_t k = 1; k <= n - 2; ++k) s.upper_central.push_back(k);
      s.upper_central.push_back(n);
      break;
    case Family::S1:
    case Family::S5:
      s = {{n + 1, n, n - 2, 0}, {n + 1, n, n}, {0}};
      break;
    case Family::S3:
      s = {{n + 1, n, n - 2, 0}, {n + 1, n, n}, {1, 1}};
      break;
    case Family::S2:
      s = {{n + 1, n - 1, n - 3, 0}, {n + 1, n - 1, n - 1}, {0}};
      break;
    case Family::S4:
    case Family::S6:
      s = {{n + 1, n - 1, 0}, {n + 1, n - 1, n - 1}, {0}};
      break;
    case Family::Snp2:
      s = {{n + 2, n, n - 2, 0}, {n + 2, n, n}, {0}};
      break;
  }
  return s;
}

std::size_t expected_invariant_count(const FamilyLabel& label) {
  switch (label.family) {
    case Family::Nilradical: return label.n - 2;
    case Family::Snp2: return label.n - 4;
    default: return label.n - 3;
  }
}

QMatrix conjugator(std::size_t n, const BasisChange& t) {
  if (const auto* s = std::get_if<Scaling>(&t)) {
    if (s->omega == 0 || s->tau == 0) throw Error(ErrorCode::InvalidParameter, "scaling needs nonzero omega and tau");
    QVector d(n);
    for (std::size_t k = 1; k <= n - 1; ++k) d[k - 1] = s->tau * pow(s->omega, static_cast<long>(n - 1 - k));
    d[n - 1] = s->omega;
    return diagonal_matrix(d);
  }
  const auto& u = std::get<Unipotent>(t);
  if (u.u.size() != n - 2 || u.v.size() != n - 1)
    throw Error(ErrorCode::InvalidParameter, "unipotent change needs u_1..u_{n-2} and v_1..v_{n-1}");
  QMatrix m = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n - 1; ++k)
    for (std::size_t j = 1; j < k; ++j) m(k - 1, j - 1) = u.u[k - j - 1];
  for (std::size_t j = 1; j <= n - 1; ++j) m(n - 1, j - 1) = u.v[j - 1];
  return m;
}

QMatrix conjugate(const QMatrix& d, const QMatrix& r) { return r * d * inverse(r); }

BasisChangeResult apply_basis_change(const LieAlgebra& g, std::size_t n, const BasisChange& t) {
  const QMatrix r = conjugator(n, t);
  QMatrix p = QMatrix::identity(g.dimension());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = r(i, j);
  LieAlgebra out = g.change_basis(p);
  const LieAlgebra nil = build_nilradical(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const QVector& got = out.structure(a, b);
      const QVector& want = nil.structure(a, b);
      for (std::size_t i = 0; i < out.dimension(); ++i)
        if (got[i] != (i < n ? want[i] : Rational(0)))
          throw Error(ErrorCode::BracketNotPreserved, "basis change does not preserve the n(n,1) brackets");
    }
  return {std::move(out), r};
}

std::optional<S6Normalization> normalize_s6(const std::vector<Rational>& a, FieldTag field) {
  // a[i] is a_{i+3}; scaling sends a_j to a_j / omega^(j-1).
  const auto shift = [](std::size_t i) { return static_cast<unsigned long>(i + 2); };
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) nonzero.push_back(i);
  if (nonzero.empty()) throw Error(ErrorCode::InvalidParameter, "all a_j = 0 is the algebra s(n+1,4)");
  unsigned long g = 0;
  for (auto i : nonzero) g = std::gcd(g, shift(i));

  std::size_t pivot = nonzero.front();
  Rational target = 1;
  if (field == FieldTag::Real) {
    auto even = std::find_if(nonzero.begin(), nonzero.end(), [](std::size_t i) { return i % 2 == 1; });
    if (even != nonzero.end())
      pivot = *even;
    else
      target = a[pivot] > 0 ? 1 : -1;
  }
  const Rational r = a[pivot] / target;
  const unsigned long m = shift(pivot) / g;

  // c = omega^g must satisfy c^m = r and be rational.
  std::vector<Rational> candidates;
  if (auto c0 = rational_root(r, static_cast<unsigned>(m))) {
    candidates.push_back(*c0);
    const bool sign_free = m % 2 == 0 && (field == FieldTag::Complex || g % 2 == 1);
    if (sign_free && *c0 != 0) candidates.push_back(-*c0);
  }
  if (candidates.empty()) return std::nullopt;

  std::optional<S6Normalization> best;
  for (const Rational& c : candidates) {
    S6Normalization cand;
    for (std::size_t i = 0; i < a.size(); ++i)
      cand.params.push_back(a[i] == 0 ? Rational(0) : a[i] / pow(c, static_cast<long>(shift(i) / g)));
    if (field == FieldTag::Real && g % 2 == 0 && c < 0) continue;
    if (auto w = rational_root(c, static_cast<unsigned>(g))) cand.omega = *w;
    if (!best || std::lexicographical_compare(best->params.begin(), best->params.end(),
                                              cand.params.begin(), cand.params.end()))
      best = std::move(cand);
  }
  return best;
}

}  // namespace solvlie
