#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "solvlie/lie_algebra.hpp"

namespace solvlie {

enum class FieldTag { Real, Complex };

FieldTag parse_field(std::string_view text);  // "R" or "C"
const char* to_string(FieldTag f) noexcept;

// The nilpotent algebra n(n,1), its six one-element extensions s(n+1,j)
// and the unique two-element extension s(n+2).
enum class Family { Nilradical, S1, S2, S3, S4, S5, S6, Snp2 };

// params: {beta} for S1, {a_3, ..., a_{n-1}} for S6, empty otherwise.
struct FamilyLabel {
  Family family = Family::Nilradical;
  std::size_t n = 4;
  std::vector<Rational> params;
  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

// Syntax: "n(n,1):5", "s(n+1,1):6:beta=3/2", "s(n+1,4):5",
// "s(n+1,6):7:a=[0,1,-2]", "s(n+2):5".
FamilyLabel parse_family_label(std::string_view text);
std::string to_string(const FamilyLabel& label);
const char* family_name(Family f) noexcept;

// Number of non-nilpotent basis elements f added to n(n,1).
std::size_t outer_count(Family f) noexcept;

// Checks parameter validity for the field and folds S1(beta = 2-n) into S3.
// Throws InvalidParameter / ExcludedParameter / BadDimension.
FamilyLabel validated(const FamilyLabel& label, FieldTag field);

// [e_k, e_n] = e_{k-1} for 2 <= k <= n-1, labels e1..en.
LieAlgebra build_nilradical(std::size_t n);

// The nilpotent Jordan block of size n-1 with ones below the diagonal,
// i.e. the matrix of x -> [x, e_n] on span{e_1..e_{n-1}} in row convention.
QMatrix jordan_block(std::size_t n);
bool kernel_in_image(const QMatrix& m);

// Derivation of n(n,1) in canonical shape: diagonal (n-1-j)alpha + beta for
// j <= n-1 and alpha in the corner, Toeplitz stripes a_3..a_{n-1} below the
// diagonal on the first n-1 rows, and a_n at (n, n-1). `a` holds
// a_3..a_n (n-2 entries).
QMatrix canonical_derivation(std::size_t n, const Rational& alpha, const Rational& beta,
                             const std::vector<Rational>& a);

struct CanonicalParameters {
  Rational alpha, beta;
  std::vector<Rational> a;  // a_3 .. a_n
};
// Reads alpha, beta, a_k off a derivation already in canonical shape.
CanonicalParameters canonical_parameters(std::size_t n, const QMatrix& d);
bool is_canonical_shape(std::size_t n, const QMatrix& d);

// Inner derivation ad_z (z in n(n,1)) with d - ad_z in canonical shape.
QVector inner_part(std::size_t n, const QMatrix& d);
QMatrix reduce_to_canonical(std::size_t n, const QMatrix& d);

// Data of an extension of n(n,1): [f_i, e_a] = D^i(e_a) and, for two outer
// elements, gamma = coefficient of e_1 in [f_1, f_2].
struct ExtensionSpec {
  std::size_t n = 4;
  std::vector<QMatrix> derivations;
  Rational gamma = 0;
};

// Builds the algebra on e1..en, f (or f1, f2). For two derivations the
// bracket [f_1, f_2] is the element z with ad z = D^2 D^1 - D^1 D^2 on the
// nilradical (no e_1 part) plus gamma e_1. Throws NotADerivation,
// CommutatorNotInner, InvalidParameter.
LieAlgebra build_extension(const ExtensionSpec& spec);

// Inverse of build_extension for algebras on the same basis layout.
ExtensionSpec extract_extension(const LieAlgebra& g, std::size_t n);

ExtensionSpec extension_of(const FamilyLabel& label);
LieAlgebra build_solvable(const FamilyLabel& label, FieldTag field);
// Nilradical or solvable, whichever the label names.
LieAlgebra build_algebra(const FamilyLabel& label, FieldTag field);

SeriesSignature expected_signature(const FamilyLabel& label);
std::size_t expected_invariant_count(const FamilyLabel& label);

// Bracket-preserving changes of basis of n(n,1).
struct Scaling {
  Rational omega = 1;
  Rational tau = 1;
};
struct Unipotent {
  QVector u;  // u_1 .. u_{n-2}
  QVector v;  // v_1 .. v_{n-1}
};
using BasisChange = std::variant<Scaling, Unipotent>;

// The matrix S = diag(tau omega^{n-2}, ..., tau, omega) or the lower
// unitriangular U with Toeplitz u-block and last row v; rows give the new
// basis in terms of the old one, and derivations transform as R D R^-1.
QMatrix conjugator(std::size_t n, const BasisChange& t);
QMatrix conjugate(const QMatrix& d, const QMatrix& r);

struct BasisChangeResult {
  LieAlgebra algebra;
  QMatrix conjugator;
};
// Applies the change to the nilradical part of g (the first n basis
// elements); outer elements are untouched. Throws BracketNotPreserved when
// the result no longer has the n(n,1) table.
BasisChangeResult apply_basis_change(const LieAlgebra& g, std::size_t n, const BasisChange& t);

// Normal form of the S6 parameters a_3..a_{n-1} under e-scalings. Over C
// the first nonzero a_j becomes 1 (ties between rational representatives
// broken towards the lexicographically largest vector); over R the first
// nonzero even-index a_j becomes 1, otherwise the first odd-index one
// becomes +-1. nullopt when the normal form leaves Q.
struct S6Normalization {
  std::vector<Rational> params;
  std::optional<Rational> omega;  // rational scaling realizing it, if any
};
std::optional<S6Normalization> normalize_s6(const std::vector<Rational>& a, FieldTag field);

struct Classification {
  FamilyLabel label;
  // Algebra after all applied basis changes; equals build_solvable(label)
  // whenever exact_match is set.
  LieAlgebra final_algebra;
  // Rows: final basis in terms of the input basis.
  QMatrix basis;
  bool exact_match = false;
};

// g must be laid out as e1..en followed by one or two outer elements with
// the n(n,1) table on the first n. Throws NotNilIndependent,
// NilpotentInput, CommutatorNotInner, ExcludedParameter,
// IrrationalNormalization.
Classification classify_algebra(const LieAlgebra& g, std::size_t n, FieldTag field);
FamilyLabel classify_extension(const ExtensionSpec& spec, FieldTag field);

}  // namespace solvlie
