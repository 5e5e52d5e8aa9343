#include "solvlie/solvlie.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "solvlie/error.hpp"
#include "solvlie/report_json.hpp"

struct solvlie_algebra {
  solvlie::LieAlgebra g;
};

namespace {

thread_local std::string last_error;

solvlie_status status_of(solvlie::ErrorCode c) {
  using solvlie::ErrorCode;
  switch (c) {
    case ErrorCode::ParseError: return SOLVLIE_ERR_PARSE;
    case ErrorCode::BadDimension:
    case ErrorCode::DimensionMismatch: return SOLVLIE_ERR_BAD_DIMENSION;
    case ErrorCode::InvalidParameter:
    case ErrorCode::NotAnIdeal:
    case ErrorCode::BracketNotPreserved:
    case ErrorCode::NotEigenvector: return SOLVLIE_ERR_INVALID_PARAMETER;
    case ErrorCode::ExcludedParameter: return SOLVLIE_ERR_EXCLUDED_PARAMETER;
    case ErrorCode::NotADerivation: return SOLVLIE_ERR_NOT_A_DERIVATION;
    case ErrorCode::NotNilIndependent: return SOLVLIE_ERR_NOT_NIL_INDEPENDENT;
    case ErrorCode::NilpotentInput: return SOLVLIE_ERR_NILPOTENT_INPUT;
    case ErrorCode::CommutatorNotInner: return SOLVLIE_ERR_COMMUTATOR_NOT_INNER;
    case ErrorCode::IrrationalNormalization: return SOLVLIE_ERR_IRRATIONAL_NORMALIZATION;
    case ErrorCode::IndexOutOfRange: return SOLVLIE_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::DivergentExponent: return SOLVLIE_ERR_DIVERGENT_EXPONENT;
    case ErrorCode::DegeneratePoint: return SOLVLIE_ERR_DEGENERATE_POINT;
    case ErrorCode::ZeroDenominator: return SOLVLIE_ERR_ARITHMETIC;
    case ErrorCode::Internal: return SOLVLIE_ERR_INTERNAL;
  }
  return SOLVLIE_ERR_INTERNAL;
}

template <class F>
solvlie_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return SOLVLIE_OK;
  } catch (const solvlie::Error& e) {
    last_error = std::string(solvlie::to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SOLVLIE_ERR_INTERNAL;
}

solvlie_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SOLVLIE_ERR_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

solvlie::SamplingOptions sampling_of(const solvlie_sampling* s) {
  solvlie::SamplingOptions o;
  if (s) {
    o.seed = s->seed;
    o.trials = s->trials;
    o.bound = s->bound;
  }
  return o;
}

}  // namespace

extern "C" {

solvlie_sampling solvlie_sampling_default(void) { return solvlie_sampling{0, 5, 1000}; }

const char* solvlie_last_error(void) { return last_error.c_str(); }

const char* solvlie_status_name(solvlie_status s) {
  switch (s) {
    case SOLVLIE_OK: return "ok";
    case SOLVLIE_ERR_PARSE: return "parse error";
    case SOLVLIE_ERR_BAD_DIMENSION: return "bad dimension";
    case SOLVLIE_ERR_INVALID_PARAMETER: return "invalid parameter";
    case SOLVLIE_ERR_EXCLUDED_PARAMETER: return "excluded parameter";
    case SOLVLIE_ERR_NOT_A_DERIVATION: return "not a derivation";
    case SOLVLIE_ERR_NOT_NIL_INDEPENDENT: return "not nil-independent";
    case SOLVLIE_ERR_NILPOTENT_INPUT: return "nilpotent input";
    case SOLVLIE_ERR_COMMUTATOR_NOT_INNER: return "commutator not inner";
    case SOLVLIE_ERR_IRRATIONAL_NORMALIZATION: return "irrational normalization";
    case SOLVLIE_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case SOLVLIE_ERR_DIVERGENT_EXPONENT: return "divergent exponent";
    case SOLVLIE_ERR_DEGENERATE_POINT: return "degenerate point";
    case SOLVLIE_ERR_ARITHMETIC: return "arithmetic error";
    case SOLVLIE_ERR_NULL_ARGUMENT: return "null argument";
    case SOLVLIE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* solvlie_version(void) { return "0.1.0"; }

void solvlie_string_free(char* s) { std::free(s); }

solvlie_status solvlie_algebra_build(const char* label, const char* field, solvlie_algebra** out) {
  if (!label || !field || !out) return null_argument("label, field and out are required");
  return guarded([&] {
    const auto l = solvlie::parse_family_label(label);
    *out = new solvlie_algebra{solvlie::build_algebra(l, solvlie::parse_field(field))};
  });
}

solvlie_status solvlie_algebra_parse(const char* table, solvlie_algebra** out) {
  if (!table || !out) return null_argument("table and out are required");
  return guarded([&] { *out = new solvlie_algebra{solvlie::parse_structure_table(table)}; });
}

void solvlie_algebra_free(solvlie_algebra* g) { delete g; }

size_t solvlie_algebra_dimension(const solvlie_algebra* g) { return g ? g->g.dimension() : 0; }

solvlie_status solvlie_algebra_table(const solvlie_algebra* g, char** out) {
  if (!g || !out) return null_argument("algebra and out are required");
  return guarded([&] { *out = dup(solvlie::to_structure_table(g->g)); });
}

solvlie_status solvlie_algebra_series_json(const solvlie_algebra* g, const char* label, char** out) {
  if (!g || !out) return null_argument("algebra and out are required");
  return guarded([&] {
    std::optional<solvlie::FamilyLabel> l;
    if (label) l = solvlie::parse_family_label(label);
    *out = dup(solvlie::series_json(g->g, l));
  });
}

solvlie_status solvlie_algebra_classify_json(const solvlie_algebra* g, size_t n, const char* field, char** out) {
  if (!g || !field || !out) return null_argument("algebra, field and out are required");
  return guarded([&] {
    *out = dup(solvlie::classification_json(solvlie::classify_algebra(g->g, n, solvlie::parse_field(field))));
  });
}

solvlie_status solvlie_derivations_json(size_t n, char** out) {
  if (!out) return null_argument("out is required");
  return guarded([&] { *out = dup(solvlie::derivations_json(n)); });
}

solvlie_status solvlie_classify_spec_json(const char* spec, const char* field, char** out) {
  if (!spec || !field || !out) return null_argument("spec, field and out are required");
  return guarded([&] {
    const auto s = solvlie::parse_extension_spec(spec);
    const auto g = solvlie::build_extension(s);
    *out = dup(solvlie::classification_json(solvlie::classify_algebra(g, s.n, solvlie::parse_field(field))));
  });
}

solvlie_status solvlie_invariants_json(const char* label, const char* field, char** out) {
  if (!label || !field || !out) return null_argument("label, field and out are required");
  return guarded([&] {
    *out = dup(solvlie::invariants_json(solvlie::parse_family_label(label), solvlie::parse_field(field)));
  });
}

solvlie_status solvlie_verify_json(const char* label, const char* field, const solvlie_sampling* sampling, char** out,
                                   int* passed) {
  if (!label || !field || !out) return null_argument("label, field and out are required");
  return guarded([&] {
    const auto r = solvlie::verify_theorem(solvlie::parse_family_label(label), solvlie::parse_field(field),
                                           sampling_of(sampling));
    *out = dup(solvlie::report_json(r));
    if (passed) *passed = r.passed() ? 1 : 0;
  });
}

solvlie_status solvlie_verify_all_json(size_t n_max, const solvlie_sampling* sampling, char** out, int* passed) {
  if (!out) return null_argument("out is required");
  return guarded([&] {
    solvlie::SweepOptions opt;
    opt.n_max = n_max;
    opt.sampling = sampling_of(sampling);
    const auto r = solvlie::verify_all(opt);
    *out = dup(r.json);
    if (passed) *passed = r.failures == 0 ? 1 : 0;
  });
}

}  // extern "C"
