#include <algorithm>

#include "solvlie/error.hpp"
#include "solvlie/families.hpp"

namespace solvlie {

namespace {

class Workspace {
 public:
  Workspace(const LieAlgebra& g, std::size_t n)
      : n_(n), p_(g.dimension() - n), cur_(g), basis_(QMatrix::identity(g.dimension())) {}

  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  const LieAlgebra& algebra() const { return cur_; }
  const QMatrix& basis() const { return basis_; }

  void apply(const QMatrix& q) {
    cur_ = cur_.change_basis(q);
    basis_ = q * basis_;
  }

  QMatrix derivation(std::size_t i) const {
    QMatrix d(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      const QVector& v = cur_.structure(n_ + i, a);
      for (std::size_t b = 0; b < n_; ++b) d(a, b) = v[b];
    }
    return d;
  }

  CanonicalParameters params(std::size_t i) const { return canonical_parameters(n_, derivation(i)); }

  // f_i -> f_i - z with D^i - ad z canonical.
  void canonicalize(std::size_t i) {
    const QVector z = inner_part(n_, derivation(i));
    QMatrix q = QMatrix::identity(cur_.dimension());
    for (std::size_t j = 0; j < n_; ++j) q(n_ + i, j) = -z[j];
    apply(q);
    if (!is_canonical_shape(n_, derivation(i)))
      throw Error(ErrorCode::NotADerivation, "[f,-] does not act as a derivation of n(n,1)");
  }

  void canonicalize_all() {
    for (std::size_t i = 0; i < p_; ++i) canonicalize(i);
  }

  void recombine(const QMatrix& rho) {
    QMatrix q = QMatrix::identity(cur_.dimension());
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < p_; ++j) q(n_ + i, n_ + j) = rho(i, j);
    apply(q);
  }

  void change_nilradical(const BasisChange& t) {
    const QMatrix r = conjugator(n_, t);
    QMatrix q = QMatrix::identity(cur_.dimension());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) q(i, j) = r(i, j);
    apply(q);
    canonicalize_all();
  }

  // Clears a_3..a_{n-1} of f_i, which must have alpha = 1.
  void clear_stripes(std::size_t i) {
    for (std::size_t l = 3; l <= n_ - 1; ++l) {
      const Rational al = params(i).a[l - 3];
      if (al == 0) continue;
      Unipotent u{QVector(n_ - 2), QVector(n_ - 1)};
      u.u[l - 2] = -al / Rational(static_cast<long>(l - 1));
      change_nilradical(u);
      if (params(i).a[l - 3] != 0) throw Error(ErrorCode::Internal, "stripe reduction failed");
    }
  }

  void clear_corner(std::size_t i, const Rational& v) {
    Unipotent u{QVector(n_ - 2), QVector(n_ - 1)};
    u.v[n_ - 2] = v;
    change_nilradical(u);
    if (params(i).a.back() != 0) throw Error(ErrorCode::Internal, "corner reduction failed");
  }

 private:
  std::size_t n_, p_;
  LieAlgebra cur_;
  QMatrix basis_;
};

void check_layout(const LieAlgebra& g, std::size_t n) {
  const LieAlgebra nil = build_nilradical(n);
  if (g.dimension() <= n) throw Error(ErrorCode::InvalidParameter, "algebra has no elements outside n(n,1)");
  const std::size_t dim = g.dimension();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < dim; ++c)
        if (g.structure(a, b)[c] != (c < n ? nil.structure(a, b)[c] : Rational(0)))
          throw Error(ErrorCode::InvalidParameter, "first n basis elements do not carry the n(n,1) brackets");
  for (std::size_t a = n; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = n; c < dim; ++c)
        if (g.structure(a, b)[c] != 0)
          throw Error(ErrorCode::InvalidParameter, "brackets with outer elements leave n(n,1)");
  if (!jacobi_violations(g).empty()) throw Error(ErrorCode::InvalidParameter, "structure constants violate the Jacobi identity");
}

}  // namespace

Classification classify_algebra(const LieAlgebra& g, std::size_t n, FieldTag field) {
  check_layout(g, n);
  const std::size_t p = g.dimension() - n;
  if (p > 2) throw Error(ErrorCode::NotNilIndependent, "n(n,1) has at most two nil-independent outer derivations");
  Workspace w(g, n);
  w.canonicalize_all();
  const Rational nn(static_cast<long>(n));
  FamilyLabel label{Family::S1, n, {}};
  bool exact = true;

  if (p == 1) {
    auto cp = w.params(0);
    if (cp.alpha == 0 && cp.beta == 0) throw Error(ErrorCode::NilpotentInput, "outer derivation is nilpotent");
    if (cp.alpha != 0) {
      QMatrix s(1, 1);
      s(0, 0) = 1 / cp.alpha;
      w.recombine(s);
      w.canonicalize(0);
      w.clear_stripes(0);
      cp = w.params(0);
      const Rational beta = cp.beta;
      const Rational an = cp.a.back();
      if (beta != 1) {
        if (an != 0) w.clear_corner(0, -an / (beta - 1));
        if (beta == 0)
          label = {Family::S2, n, {}};
        else if (beta == 2 - nn)
          label = {Family::S3, n, {}};
        else if (beta == nn - 2)
          throw Error(ErrorCode::ExcludedParameter, "beta = n-2 is excluded from s(n+1,1)");
        else
          label = {Family::S1, n, {beta}};
      } else if (an != 0) {
        w.change_nilradical(Scaling{1, an});
        label = {Family::S5, n, {}};
      } else {
        label = {Family::S1, n, {Rational(1)}};
      }
    } else {
      QMatrix s(1, 1);
      s(0, 0) = 1 / cp.beta;
      w.recombine(s);
      w.canonicalize(0);
      const Rational an = w.params(0).a.back();
      if (an != 0) w.clear_corner(0, -an);
      cp = w.params(0);
      std::vector<Rational> a(cp.a.begin(), cp.a.end() - 1);
      if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
        label = {Family::S4, n, {}};
      } else {
        auto norm = normalize_s6(a, field);
        if (!norm) throw Error(ErrorCode::IrrationalNormalization, "normal form of the a_j parameters is not rational");
        if (norm->omega)
          w.change_nilradical(Scaling{*norm->omega, 1});
        else
          exact = false;
        label = {Family::S6, n, norm->params};
      }
    }
  } else {
    const auto c1 = w.params(0);
    const auto c2 = w.params(1);
    QMatrix m(2, 2);
    m(0, 0) = c1.alpha;
    m(0, 1) = c1.beta;
    m(1, 0) = c2.alpha;
    m(1, 1) = c2.beta;
    if (rank(m) < 2) throw Error(ErrorCode::NotNilIndependent, "outer derivations are not nil-independent");
    w.recombine(inverse(m));
    w.canonicalize_all();
    w.clear_stripes(0);
    const Rational an = w.params(0).a.back();
    if (an != 0) w.clear_corner(0, an);
    const auto d2 = w.params(1);
    if (std::any_of(d2.a.begin(), d2.a.end(), [](const Rational& x) { return x != 0; }))
      throw Error(ErrorCode::CommutatorNotInner, "second derivation keeps off-diagonal terms");
    const QVector& br = w.algebra().structure(n, n + 1);
    for (std::size_t c = 1; c < br.size(); ++c)
      if (br[c] != 0) throw Error(ErrorCode::Internal, "[f1,f2] has components beyond e1");
    if (br[0] != 0) {
      QMatrix q = QMatrix::identity(n + 2);
      q(n, 0) = br[0];
      w.apply(q);
    }
    label = {Family::Snp2, n, {}};
  }

  if (exact && !(w.algebra() == build_solvable(label, field)))
    throw Error(ErrorCode::Internal, "reduced algebra differs from " + to_string(label));
  return {label, w.algebra(), w.basis(), exact};
}

FamilyLabel classify_extension(const ExtensionSpec& spec, FieldTag field) {
  return classify_algebra(build_extension(spec), spec.n, field).label;
}

}  // namespace solvlie
