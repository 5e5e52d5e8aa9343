#include "solvlie/rational.hpp"

#include <cctype>
#include <string>

#include "solvlie/error.hpp"

namespace solvlie {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::BracketNotPreserved: return "BracketNotPreserved";
    case ErrorCode::NotNilIndependent: return "NotNilIndependent";
    case ErrorCode::NilpotentInput: return "NilpotentInput";
    case ErrorCode::CommutatorNotInner: return "CommutatorNotInner";
    case ErrorCode::ExcludedParameter: return "ExcludedParameter";
    case ErrorCode::IrrationalNormalization: return "IrrationalNormalization";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DivergentExponent: return "DivergentExponent";
    case ErrorCode::NotEigenvector: return "NotEigenvector";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den))
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

std::optional<Rational> rational_root(const Rational& q, unsigned m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return q;
  if (q < 0 && m % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), m) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (q < 0) r = -r;
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace solvlie
