#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "solvlie/error.hpp"
#include "solvlie/lie_algebra.hpp"

namespace solvlie {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Natural order: "e2" < "e10" < "f" < "f1".
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    long num = i < s.size() ? std::stol(s.substr(i)) : -1;
    return std::make_pair(s.substr(0, i), num);
  };
  return split(a) < split(b);
}

struct Term {
  Rational coef;
  std::string label;
};

std::vector<Term> parse_linear_combination(const std::string& expr, int line_no) {
  std::vector<Term> terms;
  if (expr.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty right-hand side");
  std::size_t i = 0;
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected '+' or '-'");
    }
    std::size_t j = i;
    while (j < expr.size() && expr[j] != '+' && expr[j] != '-') ++j;
    const std::string tok = expr.substr(i, j - i);
    i = j;
    if (tok.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": dangling sign");
    std::size_t k = 0;
    while (k < tok.size() && !is_label_start(tok[k])) ++k;
    std::string coef_text = tok.substr(0, k);
    std::string label = tok.substr(k);
    if (!coef_text.empty() && coef_text.back() == '*') coef_text.pop_back();
    if (!label.empty() && !std::all_of(label.begin(), label.end(), is_label_char))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad label '" + label + "'");
    Rational c = coef_text.empty() ? Rational(1) : parse_rational(coef_text);
    if (label.empty()) {
      if (c != 0) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": constant term in bracket");
      continue;
    }
    terms.push_back({sign * c, label});
  }
  return terms;
}

}  // namespace

std::string to_structure_table(const LieAlgebra& g) {
  std::ostringstream os;
  const auto& labels = g.labels();
  os << "basis = ";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
  os << '\n';
  for (const auto& [key, v] : g.table()) {
    os << '[' << labels[key.first] << ',' << labels[key.second] << "] = ";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const Rational mag = abs(v[i]);
      if (first)
        os << (v[i] < 0 ? "-" : "");
      else
        os << (v[i] < 0 ? " - " : " + ");
      os << mag.get_str() << '*' << labels[i];
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

LieAlgebra parse_structure_table(std::string_view text) {
  std::vector<std::string> labels;
  bool have_basis = false;
  struct Raw {
    std::string a, b;
    std::vector<Term> rhs;
    int line;
  };
  std::vector<Raw> raws;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("basis", 0) == 0 && s.size() > 5 && (s[5] == '=' || s[5] == ':')) {
      std::string list = s.substr(6);
      std::stringstream ls(list);
      std::string item;
      while (std::getline(ls, item, ',')) {
        if (item.empty() || !is_label_start(item[0]) ||
            !std::all_of(item.begin(), item.end(), is_label_char))
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad basis label '" + item + "'");
        labels.push_back(item);
      }
      have_basis = true;
      continue;
    }
    if (s.front() != '[') throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected '[a,b] = ...'");
    const auto close = s.find(']');
    const auto comma = s.find(',');
    if (close == std::string::npos || comma == std::string::npos || comma > close || close + 1 >= s.size() ||
        s[close + 1] != '=')
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": malformed bracket");
    raws.push_back({s.substr(1, comma - 1), s.substr(comma + 1, close - comma - 1),
                    parse_linear_combination(s.substr(close + 2), line_no), line_no});
  }
  if (!have_basis) {
    for (const auto& r : raws) {
      for (const auto* l : {&r.a, &r.b}) labels.push_back(*l);
      for (const auto& t : r.rhs) labels.push_back(t.label);
    }
    std::sort(labels.begin(), labels.end(), natural_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  }
  if (labels.empty()) throw Error(ErrorCode::ParseError, "structure table declares no basis");
  const auto find = [&](const std::string& l, int ln) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": unknown label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  LieAlgebra::BracketTable table;
  const std::size_t n = labels.size();
  for (const auto& r : raws) {
    const std::size_t a = find(r.a, r.line), b = find(r.b, r.line);
    if (a == b) throw Error(ErrorCode::ParseError, "line " + std::to_string(r.line) + ": bracket of an element with itself");
    QVector v(n);
    for (const auto& t : r.rhs) v[find(t.label, r.line)] += t.coef;
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (a > b)
      for (auto& x : v) x = -x;
    if (table.count(key)) throw Error(ErrorCode::ParseError, "line " + std::to_string(r.line) + ": bracket given twice");
    table[key] = v;
  }
  return LieAlgebra(labels, table);
}

}  // namespace solvlie
