#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "solvlie/solvlie.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string field = "C";
  std::string output = "json";
  uint64_t seed = 0;
  unsigned trials = 5;
  long bound = 1000;
  std::size_t n_max = 8;
};

struct Failure {
  int code;
};

std::string take(char* s) {
  std::string out(s ? s : "");
  solvlie_string_free(s);
  return out;
}

void check(solvlie_status st) {
  if (st == SOLVLIE_OK) return;
  std::cerr << "solvlie: " << solvlie_last_error() << "\n";
  throw Failure{st == SOLVLIE_ERR_INTERNAL ? kVerifyFailed : kBadInput};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "solvlie: cannot read " << path << "\n";
    throw Failure{kBadInput};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using AlgebraPtr = std::unique_ptr<solvlie_algebra, decltype(&solvlie_algebra_free)>;

AlgebraPtr load_algebra(const std::string& spec, const Options& opt) {
  solvlie_algebra* g = nullptr;
  if (spec.rfind("@", 0) == 0)
    check(solvlie_algebra_parse(read_file(spec.substr(1)).c_str(), &g));
  else
    check(solvlie_algebra_build(spec.c_str(), opt.field.c_str(), &g));
  return AlgebraPtr(g, solvlie_algebra_free);
}

std::string dims(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].get<std::size_t>());
  if (v.size() >= 2 && v[v.size() - 1] == v[v.size() - 2]) s += ",...";
  return s + "]";
}

void emit(const Options& opt, const std::string& doc, void (*table)(const json&)) {
  if (opt.output == "json")
    std::cout << doc << "\n";
  else
    table(json::parse(doc));
}

void series_table(const json& j) {
  if (j.contains("label")) std::cout << j["label"].get<std::string>() << "\n";
  for (const char* k : {"DS", "CS", "US"}) {
    std::cout << "  " << k << " = " << dims(j["series"][k]);
    if (j.contains("expected")) std::cout << "   expected " << dims(j["expected"][k]);
    std::cout << "\n";
  }
  if (j.contains("matches")) std::cout << "  " << (j["matches"].get<bool>() ? "match" : "MISMATCH") << "\n";
}

void derivations_table(const json& j) {
  std::cout << "n = " << j["n"] << "\n"
            << "  dim Der = " << j["dimension"] << "\n"
            << "  dim Inn = " << j["inner_dimension"] << "\n"
            << "  pattern = " << (j["pattern_holds"].get<bool>() ? "holds" : "fails") << "\n";
  const auto& d = j["diagonal_rule"];
  std::cout << "  " << d["solved"].get<std::string>() << ": " << (d["holds"].get<bool>() ? "holds" : "fails") << "\n"
            << "  " << d["alternative"].get<std::string>() << ": "
            << (d["alternative_holds"].get<bool>() ? "holds" : "fails") << "\n";
}

void classify_table(const json& j) {
  std::cout << j["label"].get<std::string>();
  if (!j["exact_match"].get<bool>()) std::cout << "  (normal form needs an irrational rescaling)";
  std::cout << "\n";
  std::istringstream lines(j["table"].get<std::string>());
  for (std::string line; std::getline(lines, line);) std::cout << "  " << line << "\n";
}

void invariants_table(const json& j) {
  std::cout << j["label"].get<std::string>() << "\n";
  std::size_t i = 0;
  for (const auto& e : j["invariants"]) std::cout << "  [" << i++ << "] " << e.get<std::string>() << "\n";
  if (i == 0) std::cout << "  (none)\n";
}

void report_table(const json& j) {
  std::cout << j["label"].get<std::string>() << " over " << j["field"].get<std::string>() << "\n"
            << "  rank C = " << j["rank_C"] << ", invariants " << j["count_computed"] << " (expected "
            << j["count_expected"] << "), independence rank " << j["independence_rank"] << "\n";
  for (const auto& c : j["checks"])
    std::cout << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>() << "\n";
  for (const auto& w : j["witnesses"]) std::cout << "    " << w.get<std::string>() << "\n";
}

void sweep_table(const json& j) {
  for (const auto& c : j["cells"]) {
    std::cout << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["field"].get<std::string>() << "  "
              << c["label"].get<std::string>() << "\n";
    for (const auto& w : c["witnesses"]) std::cout << "      " << w.get<std::string>() << "\n";
  }
  std::cout << j["cells"].size() << " cells, " << j["failures"] << " failures\n";
}

solvlie_sampling sampling(const Options& opt) { return solvlie_sampling{opt.seed, opt.trials, opt.bound}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvable extensions of n(n,1): construction, classification and invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--field", opt.field, "Base field")->check(CLI::IsMember({"R", "C"}));
  app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", opt.seed, "Seed for random evaluation points");
  app.add_option("--trials", opt.trials, "Random trials for rank computations")->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound, "Coordinate bound for random points")->check(CLI::PositiveNumber);
  app.add_option("--n-max", opt.n_max, "Largest n for verify-all")->check(CLI::Range(4, 16));

  std::string target;
  std::size_t n = 0;

  auto* build = app.add_subcommand("build", "Print the structure constants of an algebra");
  build->add_option("family", target, "Family label")->required();

  auto* series = app.add_subcommand("series", "Derived, lower and upper central series dimensions");
  series->add_option("family", target, "Family label, or @file with a structure table")->required();

  auto* derivations = app.add_subcommand("derivations", "Derivation algebra of n(n,1)");
  derivations->add_option("n", n, "Dimension")->required();

  auto* classify = app.add_subcommand("classify", "Classify an extension given as a JSON spec file");
  classify->add_option("spec", target, "Spec file, or @file with a structure table")->required();
  std::size_t classify_n = 0;
  classify->add_option("--n", classify_n, "Nilradical dimension for structure-table input");

  auto* invariants = app.add_subcommand("invariants", "List the invariants of a family");
  invariants->add_option("family", target, "Family label")->required();

  auto* verify = app.add_subcommand("verify", "Check rank, annihilation and independence of the invariants");
  verify->add_option("family", target, "Family label")->required();

  app.add_subcommand("verify-all", "Sweep every family for n = 4..n-max");

  CLI11_PARSE(app, argc, argv);

  try {
    char* out = nullptr;
    if (*build) {
      auto g = load_algebra(target, opt);
      check(solvlie_algebra_table(g.get(), &out));
      const std::string table = take(out);
      if (opt.output == "json")
        std::cout << json{{"schema", 1}, {"label", target}, {"table", table}}.dump(2) << "\n";
      else
        std::cout << table;
      return 0;
    }
    if (*series) {
      auto g = load_algebra(target, opt);
      const bool labelled = target.rfind("@", 0) != 0;
      check(solvlie_algebra_series_json(g.get(), labelled ? target.c_str() : nullptr, &out));
      const std::string doc = take(out);
      emit(opt, doc, series_table);
      const json j = json::parse(doc);
      return j.contains("matches") && !j["matches"].get<bool>() ? kVerifyFailed : 0;
    }
    if (*derivations) {
      check(solvlie_derivations_json(n, &out));
      const std::string doc = take(out);
      emit(opt, doc, derivations_table);
      return json::parse(doc)["pattern_holds"].get<bool>() ? 0 : kVerifyFailed;
    }
    if (*classify) {
      if (target.rfind("@", 0) == 0) {
        if (classify_n == 0) {
          std::cerr << "solvlie: --n is required for structure-table input\n";
          return kBadInput;
        }
        auto g = load_algebra(target, opt);
        check(solvlie_algebra_classify_json(g.get(), classify_n, opt.field.c_str(), &out));
      } else {
        check(solvlie_classify_spec_json(read_file(target).c_str(), opt.field.c_str(), &out));
      }
      emit(opt, take(out), classify_table);
      return 0;
    }
    if (*invariants) {
      check(solvlie_invariants_json(target.c_str(), opt.field.c_str(), &out));
      emit(opt, take(out), invariants_table);
      return 0;
    }
    const solvlie_sampling s = sampling(opt);
    int passed = 0;
    if (*verify)
      check(solvlie_verify_json(target.c_str(), opt.field.c_str(), &s, &out, &passed));
    else
      check(solvlie_verify_all_json(opt.n_max, &s, &out, &passed));
    emit(opt, take(out), *verify ? report_table : sweep_table);
    if (!passed) std::cerr << "solvlie: verification failed\n";
    return passed ? 0 : kVerifyFailed;
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "solvlie: " << e.what() << "\n";
    return kBadInput;
  }
}
