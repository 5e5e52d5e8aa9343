#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "solvlie/families.hpp"
#include "solvlie/invariants.hpp"

namespace solvlie {

// JSON documents, all carrying "schema": 1. Rationals are strings "p/q",
// polynomials use the sparse term serialization.

std::string series_json(const LieAlgebra& g, const std::optional<FamilyLabel>& label);
std::string derivations_json(std::size_t n);
std::string classification_json(const Classification& c);
std::string invariants_json(const FamilyLabel& label, FieldTag field);
std::string report_json(const Report& r);

// {"n": 5, "gamma": "0", "derivations": [D, ...]} where each D is either a
// matrix given as rows of rational strings or an object
// {"alpha": "1", "beta": "0", "a": [a_3..a_{n-1}], "an": "0"}.
ExtensionSpec parse_extension_spec(std::string_view json);

struct SweepOptions {
  std::size_t n_max = 8;
  SamplingOptions sampling;
  std::size_t s6_samples = 2;  // random S6 vectors per (n, field)
  bool parallel = true;
};

struct SweepResult {
  std::string json;
  std::size_t cells = 0;
  std::size_t failures = 0;
};

// Every family for n = 4..n_max over both fields: series signatures,
// invariant report and classifier round trip.
SweepResult verify_all(const SweepOptions& opt);

}  // namespace solvlie
