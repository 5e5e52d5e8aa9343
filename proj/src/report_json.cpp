#include "solvlie/report_json.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <random>

#include <json.hpp>

#include "solvlie/error.hpp"

namespace solvlie {

using json = nlohmann::ordered_json;

namespace {

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json matrix_rows(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_list(m.row(i)));
  return rows;
}

json label_json(const FamilyLabel& label) {
  json j;
  j["label"] = to_string(label);
  j["family"] = family_name(label.family);
  j["n"] = label.n;
  j["params"] = rational_list(label.params);
  return j;
}

json signature_json(const SeriesSignature& s) {
  return json{{"DS", s.derived}, {"CS", s.lower_central}, {"US", s.upper_central}};
}

Rational rational_field(const json& j, const char* key, const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a rational string or integer");
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string or integer");
}

json report_object(const Report& r) {
  json j;
  j["schema"] = 1;
  j["family"] = family_name(r.label.family);
  j["label"] = to_string(r.label);
  j["n"] = r.label.n;
  j["field"] = to_string(r.field);
  j["params"] = rational_list(r.label.params);
  j["count_expected"] = r.count_expected;
  j["count_computed"] = r.count_computed;
  j["rank_C"] = r.rank_c;
  j["annihilation"] = r.annihilation;
  j["independence_rank"] = r.independence_rank;
  json inv = json::array();
  for (const auto& e : r.invariants) inv.push_back(e.to_string(r.variables));
  j["invariants"] = inv;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}});
  j["checks"] = checks;
  j["witnesses"] = r.witnesses();
  j["passed"] = r.passed();
  return j;
}

}  // namespace

std::string series_json(const LieAlgebra& g, const std::optional<FamilyLabel>& label) {
  json j;
  j["schema"] = 1;
  if (label) j["label"] = to_string(*label);
  j["dimension"] = g.dimension();
  const SeriesSignature s = series_signature(g);
  j["series"] = signature_json(s);
  j["formatted"] = json{{"DS", format_dimensions(s.derived)},
                        {"CS", format_dimensions(s.lower_central)},
                        {"US", format_dimensions(s.upper_central)}};
  if (label) {
    const SeriesSignature e = expected_signature(*label);
    j["expected"] = signature_json(e);
    j["matches"] = s == e;
  }
  return j.dump(2);
}

std::string derivations_json(std::size_t n) {
  const LieAlgebra nil = build_nilradical(n);
  const auto der = derivation_space(nil);
  const auto inner = inner_derivation_space(nil);
  json j;
  j["schema"] = 1;
  j["n"] = n;
  j["dimension"] = der.size();
  j["inner_dimension"] = span_dimension(inner);
  json basis = json::array();
  for (const auto& d : der) basis.push_back(matrix_rows(d));
  j["basis"] = basis;
  json ib = json::array();
  for (const auto& d : inner) ib.push_back(matrix_rows(d));
  j["inner_basis"] = ib;
  j["pattern_holds"] = verify_derivation_pattern(n, der);
  bool minus = true, plus = true;
  for (const auto& d : der) {
    minus = minus && diagonal_rule_holds(n, d, -1);
    plus = plus && diagonal_rule_holds(n, d, +1);
  }
  j["diagonal_rule"] = json{
      {"solved", "D_ii = (n-i-1) D_nn + D_{n-1,n-1}"},
      {"holds", minus},
      {"alternative", "D_ii = (n-i+1) D_nn + D_{n-1,n-1}"},
      {"alternative_holds", plus},
  };
  return j.dump(2);
}

std::string classification_json(const Classification& c) {
  json j;
  j["schema"] = 1;
  j.update(label_json(c.label));
  j["exact_match"] = c.exact_match;
  j["basis"] = matrix_rows(c.basis);
  j["table"] = to_structure_table(c.final_algebra);
  return j.dump(2);
}

std::string invariants_json(const FamilyLabel& label_in, FieldTag field) {
  const FamilyLabel label = validated(label_in, field);
  const LieAlgebra g = build_algebra(label, field);
  json j;
  j["schema"] = 1;
  j.update(label_json(label));
  j["field"] = to_string(field);
  json inv = json::array();
  for (const auto& e : invariants_of(label)) inv.push_back(e.to_string(g.labels()));
  j["invariants"] = inv;
  return j.dump(2);
}

std::string report_json(const Report& r) { return report_object(r).dump(2); }

ExtensionSpec parse_extension_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("extension spec: ") + e.what());
  }
  try {
    ExtensionSpec spec;
    spec.n = j.at("n").get<std::size_t>();
    if (spec.n < 4) throw Error(ErrorCode::BadDimension, "n must be at least 4");
    spec.gamma = rational_field(j, "gamma", 0);
    for (const auto& d : j.at("derivations")) {
      if (d.is_object()) {
        std::vector<Rational> a;
        for (const auto& x : d.value("a", json::array())) a.push_back(rational_value(x));
        if (a.size() != spec.n - 3) throw Error(ErrorCode::InvalidParameter, "'a' needs a_3..a_{n-1}");
        a.push_back(rational_field(d, "an", 0));
        spec.derivations.push_back(
            canonical_derivation(spec.n, rational_field(d, "alpha", 0), rational_field(d, "beta", 0), a));
      } else {
        std::vector<QVector> rows;
        for (const auto& r : d) {
          QVector row;
          for (const auto& x : r) row.push_back(rational_value(x));
          if (row.size() != spec.n) throw Error(ErrorCode::DimensionMismatch, "derivation rows must have n entries");
          rows.push_back(std::move(row));
        }
        if (rows.size() != spec.n) throw Error(ErrorCode::DimensionMismatch, "derivation must have n rows");
        spec.derivations.push_back(QMatrix::from_rows(rows, spec.n));
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("extension spec: ") + e.what());
  }
}

namespace {

struct Cell {
  FamilyLabel label;
  FieldTag field;
};

std::vector<Cell> sweep_cells(const SweepOptions& opt) {
  std::vector<Cell> cells;
  std::mt19937_64 rng(opt.sampling.seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (std::size_t n = 4; n <= opt.n_max; ++n) {
    const long nn = static_cast<long>(n);
    for (FieldTag field : {FieldTag::Complex, FieldTag::Real}) {
      cells.push_back({{Family::Nilradical, n, {}}, field});
      for (long b = -3; b <= 5; ++b) {
        if (b == 0 || b == nn - 2 || b == 2 - nn) continue;
        cells.push_back({{Family::S1, n, {Rational(b)}}, field});
      }
      for (Family f : {Family::S2, Family::S3, Family::S4, Family::S5, Family::Snp2}) cells.push_back({{f, n, {}}, field});
      for (std::size_t s = 0; s < opt.s6_samples;) {
        std::vector<Rational> a(n - 3);
        for (auto& x : a) x = entry(rng);
        if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) continue;
        auto norm = normalize_s6(a, field);
        if (!norm) continue;
        cells.push_back({{Family::S6, n, norm->params}, field});
        ++s;
      }
    }
  }
  return cells;
}

json run_cell(const Cell& cell, const SamplingOptions& sampling) {
  json j;
  j["label"] = to_string(cell.label);
  j["field"] = to_string(cell.field);
  std::vector<std::string> witnesses;
  try {
    const LieAlgebra g = build_algebra(cell.label, cell.field);
    const bool series_ok = series_signature(g) == expected_signature(cell.label);
    if (!series_ok) witnesses.push_back("series signature differs from the classification");
    j["series"] = series_ok;

    const Report r = verify_theorem(cell.label, cell.field, sampling);
    j["invariants"] = r.passed();
    for (const auto& w : r.witnesses()) witnesses.push_back(w);

    bool classify_ok = true;
    if (cell.label.family != Family::Nilradical) {
      const Classification c = classify_algebra(g, cell.label.n, cell.field);
      classify_ok = c.label == cell.label && c.exact_match;
      if (!classify_ok) witnesses.push_back("classifier returned " + to_string(c.label));
    }
    j["classify"] = classify_ok;
    j["passed"] = series_ok && r.passed() && classify_ok;
  } catch (const Error& e) {
    j["passed"] = false;
    witnesses.push_back(std::string(to_string(e.code())) + ": " + e.what());
  }
  j["witnesses"] = witnesses;
  return j;
}

}  // namespace

SweepResult verify_all(const SweepOptions& opt) {
  const auto cells = sweep_cells(opt);
  std::vector<json> results(cells.size());
  if (opt.parallel) {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i; (i = next++) < cells.size();) results[i] = run_cell(cells[i], opt.sampling);
    };
    const unsigned count = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < count; ++t) workers.push_back(std::async(std::launch::async, worker));
    for (auto& w : workers) w.get();
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(cells[i], opt.sampling);
  }
  SweepResult out;
  out.cells = cells.size();
  json j;
  j["schema"] = 1;
  j["n_max"] = opt.n_max;
  j["seed"] = opt.sampling.seed;
  json arr = json::array();
  for (auto& r : results) {
    if (!r["passed"].get<bool>()) ++out.failures;
    arr.push_back(std::move(r));
  }
  j["cells"] = arr;
  j["failures"] = out.failures;
  j["passed"] = out.failures == 0;
  out.json = j.dump(2);
  return out;
}

}  // namespace solvlie
