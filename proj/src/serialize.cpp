#include "borelfix/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "borelfix/error.hpp"

namespace borelfix {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_nonnegative(const std::string& token, const std::string& context) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit))
    fail(ErrorKind::InvalidArgument, "expected a nonnegative integer in " + context + ": '" + token + "'");
  try {
    return std::stoi(token);
  } catch (const std::out_of_range&) {
    fail(ErrorKind::InvalidArgument, "integer out of range in " + context + ": '" + token + "'");
  }
}

Json generators_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  return gens;
}

Json predicted_json(const std::optional<int>& predicted) {
  if (predicted) return *predicted;
  return "≥3/unknown";
}

}  // namespace

Json to_json(const GotzmannPartition& b) { return b.parts(); }
Json to_json(const MacaulayPartition& e) { return e.parts(); }

Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["num_vars"] = ideal.num_vars();
  j["generators"] = generators_json(ideal);
  return j;
}

Json to_json(const HilbertData& data) {
  Json j;
  j["ideal"] = to_json(data.ideal);
  j["zero_polynomial"] = !data.polynomial.has_value();
  j["partition"] = data.polynomial ? to_json(*data.polynomial) : Json(nullptr);
  j["stabilization_degree"] = data.stabilization_degree;
  j["window_retries"] = data.window_retries;
  Json values = Json::object();
  for (const auto& [degree, value] : data.function_values) values[std::to_string(degree)] = value;
  j["function_values"] = values;
  return j;
}

Json to_json(const IdealSet& ideals) {
  Json arr = Json::array();
  for (const auto& ideal : ideals) arr.push_back(to_json(ideal));
  return arr;
}

Json to_json(const ClassificationVerdict& verdict) {
  Json j;
  j["clause"] = verdict.matched_clause;
  j["predicted"] = predicted_json(verdict.predicted);
  j["verified"] = verdict.verified_count ? Json(*verdict.verified_count) : Json(nullptr);
  return j;
}

Json to_json(const CellReport& cell, bool with_ideals) {
  Json j;
  j["partition"] = to_json(cell.coords.partition);
  j["n"] = cell.coords.n;
  j["char"] = cell.coords.ch.value();
  j["method"] = to_string(cell.method);
  j["clause"] = cell.verdict.matched_clause;
  j["predicted"] = predicted_json(cell.verdict.predicted);
  j["verified"] = cell.verdict.verified_count ? Json(*cell.verdict.verified_count) : Json(nullptr);
  j["discrepancies"] = cell.discrepancies;
  if (with_ideals) j["ideals"] = to_json(cell.ideals);
  return j;
}

Json to_json(const VerificationReport& report, bool with_ideals) {
  Json j;
  j["cells"] = Json::array();
  for (const auto& cell : report.cells) j["cells"].push_back(to_json(cell, with_ideals));
  j["cell_count"] = report.cells.size();
  j["discrepancy_count"] = report.discrepancy_count();
  return j;
}

Json to_json(const Tree& tree) {
  Json j;
  j["codim"] = tree.codim;
  j["depth"] = tree.depth;
  j["nodes"] = Json::array();
  for (const auto& node : tree.nodes) {
    Json n;
    n["partition"] = to_json(node.partition);
    n["n"] = node.n;
    n["depth"] = node.depth;
    n["clause"] = node.clause;
    n["out_of_scope"] = node.out_of_scope;
    n["predicted"] = node.out_of_scope ? Json("out of scope") : predicted_json(node.predicted);
    n["enumerated"] = node.enumerated ? Json(*node.enumerated) : Json(nullptr);
    n["child_a"] = node.child_a;
    n["child_phi"] = node.child_phi;
    j["nodes"].push_back(n);
  }
  return j;
}

GotzmannPartition partition_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "partition JSON must be an array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorKind::InvalidArgument, "partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  return GotzmannPartition(std::move(parts));
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("generators"))
    fail(ErrorKind::InvalidArgument, "ideal JSON needs num_vars and generators");
  if (!j["num_vars"].is_number_integer() || j["num_vars"].get<int>() < 1)
    fail(ErrorKind::InvalidArgument, "num_vars must be a positive integer");
  const int num_vars = j["num_vars"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) fail(ErrorKind::InvalidArgument, "generator must be an exponent array");
    std::vector<int> e;
    for (const auto& v : g) {
      if (!v.is_number_integer()) fail(ErrorKind::InvalidArgument, "exponents must be integers");
      e.push_back(v.get<int>());
    }
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), num_vars);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(ErrorKind::InvalidArgument, "unbalanced brackets in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<int> out;
  std::string token;
  while (in >> token) out.push_back(parse_nonnegative(token, "list '" + text + "'"));
  if (out.empty()) fail(ErrorKind::InvalidArgument, "empty integer list");
  return out;
}

std::string to_human(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.num_vars(); ++i) {
    const int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_human(const MonomialIdeal& ideal) {
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_human(ideal.generators()[i]);
  }
  return out + ">";
}

namespace {

// Factors as (index, power) pairs; used to infer the ring size.
std::vector<std::pair<int, int>> parse_factors(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorKind::InvalidArgument, "empty monomial");
  std::vector<std::pair<int, int>> factors;
  if (s == "1") return factors;
  std::istringstream in(s);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor[0] != 'x')
      fail(ErrorKind::InvalidArgument, "bad factor '" + factor + "' in monomial '" + s + "'");
    const auto caret = factor.find('^');
    const int index = parse_nonnegative(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), "monomial '" + s + "'");
    const int power = caret == std::string::npos ? 1 : parse_nonnegative(factor.substr(caret + 1), "monomial '" + s + "'");
    factors.emplace_back(index, power);
  }
  return factors;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int num_vars) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  for (const auto& [index, power] : parse_factors(text)) {
    if (index >= num_vars)
      fail(ErrorKind::InvalidArgument, "variable x" + std::to_string(index) + " outside a ring of " +
                                           std::to_string(num_vars) + " variables");
    e[static_cast<std::size_t>(index)] += power;
  }
  return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(const std::string& text, int num_vars) {
  std::string s = trim(text);
  if (!s.empty() && (s.front() == '<' || s.front() == '(')) {
    const char close = s.front() == '<' ? '>' : ')';
    if (s.back() != close) fail(ErrorKind::InvalidArgument, "unbalanced ideal delimiters");
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<std::string> pieces;
  if (!s.empty() && s.back() == ',') fail(ErrorKind::InvalidArgument, "empty generator in ideal");
  if (!s.empty()) {
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, ',')) pieces.push_back(piece);
  }
  if (num_vars <= 0) {
    int largest = 0;
    for (const auto& piece : pieces)
      for (const auto& [index, power] : parse_factors(piece)) largest = std::max(largest, index);
    num_vars = largest + 1;
  }
  std::vector<Monomial> gens;
  for (const auto& piece : pieces) gens.push_back(parse_monomial(piece, num_vars));
  return minimalize(std::move(gens), num_vars);
}

std::vector<GridCell> grid_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidArgument, "grid JSON must be an object");
  try {
    if (j.contains("cells")) {
      std::vector<GridCell> grid;
      for (const auto& cell : j.at("cells")) {
        const auto method = count_method_from_string(cell.value("method", std::string("auto")));
        grid.push_back({SchemeCoordinates(partition_from_json(cell.at("partition")),
                                          cell.at("n").get<int>(),
                                          Characteristic(cell.value("char", 0))),
                        method});
      }
      return grid;
    }
    return make_grid(j.at("max_r").get<int>(), j.at("max_b1").get<int>(),
                     j.value("codims", std::vector<int>{2, 3}), j.value("chars", std::vector<int>{0}),
                     count_method_from_string(j.value("method", std::string("auto"))),
                     j.value("oracle_feasible_only", false));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed grid JSON: ") + e.what());
  }
}

}  // namespace borelfix
