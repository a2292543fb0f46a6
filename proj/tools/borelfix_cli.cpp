// borelfix: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 search guard
// tripped, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "borelfix/borelfix.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

const char* kind_name(bf_status status) {
  switch (status) {
    case BF_ERR_DOMAIN: return "domain";
    case BF_ERR_INVALID_ARGUMENT: return "usage";
    case BF_ERR_FEASIBILITY: return "feasibility";
    case BF_ERR_INTERNAL: return "internal";
    default: return "ok";
  }
}

void check(bf_status status) {
  if (status != BF_OK) throw Failure{static_cast<int>(status), kind_name(status), bf_last_error()};
}

void usage_error(const std::string& message) { throw Failure{kExitUsage, "usage", message}; }

struct PartitionDeleter {
  void operator()(bf_partition* p) const { bf_partition_free(p); }
};
struct IdealDeleter {
  void operator()(bf_ideal* i) const { bf_ideal_free(i); }
};
struct SetDeleter {
  void operator()(bf_ideal_set* s) const { bf_ideal_set_free(s); }
};
using Partition = std::unique_ptr<bf_partition, PartitionDeleter>;
using Ideal = std::unique_ptr<bf_ideal, IdealDeleter>;
using Set = std::unique_ptr<bf_ideal_set, SetDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  bf_string_free(s);
  return out;
}

Partition parse_partition(const std::string& text) {
  bf_partition* p = nullptr;
  check(bf_partition_parse(text.c_str(), &p));
  return Partition(p);
}

Json partition_json(const bf_partition* p) {
  char* s = nullptr;
  check(bf_partition_to_json(p, &s));
  return Json::parse(take(s));
}

Json ideal_json(const bf_ideal* ideal) {
  char* s = nullptr;
  check(bf_ideal_to_json(ideal, &s));
  return Json::parse(take(s));
}

std::string ideal_human(const bf_ideal* ideal) {
  char* s = nullptr;
  check(bf_ideal_to_string(ideal, &s));
  return take(s);
}

bool flag(bf_status (*query)(const bf_ideal*, int*), const bf_ideal* ideal) {
  int out = 0;
  check(query(ideal, &out));
  return out != 0;
}

bool is_p_borel(const bf_ideal* ideal, int ch) {
  int out = 0;
  check(bf_ideal_is_p_borel(ideal, ch, &out));
  return out != 0;
}

std::string list_text(const Json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].dump();
  }
  return out + ")";
}

std::string value_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

struct Options {
  bool json = false;
  bool seedless = false;
  bool force = false;
  int max_depth = 0;

  std::string partition;
  std::string ideal;
  int n = -1;
  int ch = 0;
  int reg_hint = -1;
  std::vector<long long> at;
  bool verify = false;
  std::string method = "auto";
  std::string grid = "default";
  bool with_ideals = false;
  int codim = 2;
  int depth = 3;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Ideal read_ideal(const Options& o) {
  bf_ideal* ideal = nullptr;
  const std::string& text = o.ideal;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{')
    check(bf_ideal_from_json(text.c_str(), &ideal));
  else
    check(bf_ideal_parse(text.c_str(), o.n < 0 ? 0 : o.n + 1, &ideal));
  return Ideal(ideal);
}

void run_hp(const Options& o) {
  if (o.partition.empty() == o.ideal.empty()) usage_error("hp needs exactly one of --partition or --ideal");
  std::ostringstream text;
  if (!o.ideal.empty()) {
    const Ideal ideal = read_ideal(o);
    char* s = nullptr;
    check(bf_ideal_hilbert_json(ideal.get(), o.reg_hint, &s));
    Json j = Json::parse(take(s));
    text << "ideal: " << ideal_human(ideal.get()) << "\n";
    if (j["zero_polynomial"].get<bool>())
      text << "hilbert polynomial: 0\n";
    else
      text << "gotzmann partition: " << list_text(j["partition"]) << "\n";
    text << "stabilization degree: " << j["stabilization_degree"] << "\n";
    text << "window retries: " << j["window_retries"] << "\n";
    emit(o, j, text.str());
    return;
  }
  const Partition p = parse_partition(o.partition);
  Json j;
  j["partition"] = partition_json(p.get());
  int mac[256];
  std::size_t len = 0;
  check(bf_partition_to_macaulay(p.get(), mac, 256, &len));
  j["macaulay"] = std::vector<int>(mac, mac + std::min<std::size_t>(len, 256));
  j["degree"] = bf_partition_part(p.get(), 0);
  j["gotzmann_number"] = bf_partition_length(p.get());

  std::vector<long long> at = o.at;
  if (at.empty())
    for (long long t = 0; t <= 5; ++t) at.push_back(t);
  Json values = Json::object();
  for (long long t : at) {
    char* s = nullptr;
    check(bf_partition_evaluate(p.get(), t, &s));
    values[std::to_string(t)] = take(s);
  }
  j["values"] = values;

  bf_partition* q = nullptr;
  check(bf_partition_apply_A(p.get(), &q));
  j["A"] = partition_json(Partition(q).get());
  check(bf_partition_apply_Phi(p.get(), &q));
  j["Phi"] = partition_json(Partition(q).get());
  if (bf_partition_apply_nabla(p.get(), &q) == BF_OK)
    j["nabla"] = partition_json(Partition(q).get());
  else
    j["nabla"] = nullptr;

  text << "gotzmann partition: " << list_text(j["partition"]) << "\n";
  text << "macaulay partition: " << list_text(j["macaulay"]) << "\n";
  text << "degree " << j["degree"] << ", gotzmann number " << j["gotzmann_number"] << "\n";
  for (const auto& [t, v] : values.items()) text << "p(" << t << ") = " << value_text(v) << "\n";
  text << "A: " << list_text(j["A"]) << "\n";
  text << "Phi: " << list_text(j["Phi"]) << "\n";
  text << "nabla: " << (j["nabla"].is_null() ? std::string("undefined (constant)") : list_text(j["nabla"]))
       << "\n";
  emit(o, j, text.str());
}

void run_lex(const Options& o) {
  const Partition p = parse_partition(o.partition);
  bf_ideal* raw = nullptr;
  check(bf_lex_from_partition(p.get(), o.n, &raw));
  const Ideal ideal(raw);
  Json j;
  j["partition"] = partition_json(p.get());
  j["n"] = o.n;
  j["ideal"] = ideal_json(ideal.get());
  j["human"] = ideal_human(ideal.get());
  // Both forms are always shown.
  std::ostringstream text;
  text << j["human"].get<std::string>() << "\n" << j["ideal"].dump() << "\n";
  emit(o, j, text.str());
}

void run_check_ideal(const Options& o) {
  if (o.ideal.empty()) usage_error("check-ideal needs --ideal");
  const Ideal ideal = read_ideal(o);
  const int nv = bf_ideal_num_vars(ideal.get());
  Json j;
  j["ideal"] = ideal_json(ideal.get());
  j["human"] = ideal_human(ideal.get());
  j["char"] = o.ch;
  j["strongly_stable"] = flag(bf_ideal_is_strongly_stable, ideal.get());
  j["p_borel"] = is_p_borel(ideal.get(), o.ch);

  bf_ideal* raw = nullptr;
  check(bf_ideal_saturate(ideal.get(), nv - 1, &raw));
  const Ideal sat(raw);
  j["saturated"] = bf_ideal_equal(sat.get(), ideal.get()) != 0;

  Json expandable = Json::array();
  if (j["strongly_stable"].get<bool>() && j["saturated"].get<bool>() && nv >= 2) {
    check(bf_expandable_generators(ideal.get(), &raw));
    const Ideal ex(raw);
    std::vector<int> exps(static_cast<std::size_t>(nv));
    for (std::size_t g = 0; g < bf_ideal_num_generators(ex.get()); ++g) {
      check(bf_ideal_generator(ex.get(), g, exps.data()));
      expandable.push_back(exps);
    }
  }
  j["expandable_generators"] = expandable;

  char* s = nullptr;
  check(bf_ideal_hilbert_json(ideal.get(), o.reg_hint, &s));
  Json hilbert = Json::parse(take(s));
  j["hilbert_polynomial"] = hilbert["zero_polynomial"].get<bool>() ? Json(nullptr) : hilbert["partition"];

  std::ostringstream text;
  text << "ideal: " << j["human"].get<std::string>() << "\n";
  text << "strongly stable: " << j["strongly_stable"] << "\n";
  text << o.ch << "-borel: " << j["p_borel"] << "\n";
  text << "saturated: " << j["saturated"] << "\n";
  text << "expandable generators: " << expandable.size() << "\n";
  text << "hilbert polynomial: "
       << (j["hilbert_polynomial"].is_null() ? std::string("0") : list_text(j["hilbert_polynomial"]))
       << "\n";
  emit(o, j, text.str());
}

Json set_json(const bf_ideal_set* set, std::optional<int> ch, std::ostringstream& text) {
  Json ideals = Json::array();
  for (std::size_t i = 0; i < bf_ideal_set_size(set); ++i) {
    const bf_ideal* ideal = bf_ideal_set_get(set, i);
    Json item;
    item["ideal"] = ideal_json(ideal);
    item["human"] = ideal_human(ideal);
    text << item["human"].get<std::string>();
    if (ch) {
      const bool ss = flag(bf_ideal_is_strongly_stable, ideal);
      item["strongly_stable"] = ss;
      item["nonstandard"] = !ss;
      if (!ss) text << "  [nonstandard]";
    }
    text << "\n";
    ideals.push_back(item);
  }
  return ideals;
}

void run_reeves(const Options& o) {
  const Partition p = parse_partition(o.partition);
  bf_ideal_set* raw = nullptr;
  check(bf_reeves(p.get(), o.n, &raw));
  const Set set(raw);
  std::ostringstream body;
  Json j;
  j["partition"] = partition_json(p.get());
  j["n"] = o.n;
  j["count"] = bf_ideal_set_size(set.get());
  j["ideals"] = set_json(set.get(), std::nullopt, body);
  std::ostringstream text;
  text << j["count"] << " saturated strongly stable ideal(s)\n" << body.str();
  emit(o, j, text.str());
}

void run_oracle(const Options& o) {
  const Partition p = parse_partition(o.partition);
  bf_ideal_set* raw = nullptr;
  check(bf_oracle(p.get(), o.n, o.ch, o.force ? 1 : 0, &raw));
  const Set set(raw);
  std::ostringstream body;
  Json j;
  j["partition"] = partition_json(p.get());
  j["n"] = o.n;
  j["char"] = o.ch;
  j["generation_degree_bound"] = bf_partition_length(p.get());
  j["forced"] = o.force;
  j["count"] = bf_ideal_set_size(set.get());
  j["ideals"] = set_json(set.get(), o.ch, body);
  std::ostringstream text;
  text << j["count"] << " saturated Borel-fixed ideal(s) in characteristic " << o.ch
       << " (generators searched up to degree " << j["generation_degree_bound"] << ")\n"
       << body.str();
  emit(o, j, text.str());
}

void run_classify(const Options& o) {
  const Partition p = parse_partition(o.partition);
  char* s = nullptr;
  check(bf_classify(p.get(), o.n, o.ch, o.verify ? 1 : 0, o.method.c_str(), o.force ? 1 : 0, &s));
  Json j = Json::parse(take(s));
  std::ostringstream text;
  text << "partition " << list_text(j["partition"]) << ", n = " << j["n"] << ", char " << j["char"]
       << ", codim " << j["codim"] << "\n";
  text << "clause: " << j["clause"].get<std::string>() << "\n";
  text << "predicted: " << value_text(j["predicted"]) << "\n";
  if (j.contains("verified") && !j["verified"].is_null()) {
    text << "verified: " << j["verified"] << " (" << j["method"].get<std::string>() << ")\n";
    for (const auto& ideal : j["ideals"]) {
      text << "  " << ideal["generators"].dump() << "\n";
    }
  }
  emit(o, j, text.str());
}

std::string read_grid(const std::string& grid) {
  if (grid == "default") return grid;
  const auto first = grid.find_first_not_of(" \t\n");
  if (first != std::string::npos && grid[first] == '{') return grid;
  std::ifstream in(grid);
  if (!in) usage_error("cannot read grid file: " + grid);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void run_verify(const Options& o) {
  const std::string grid = read_grid(o.grid);
  char* s = nullptr;
  check(bf_verify(grid.c_str(), o.with_ideals ? 1 : 0, o.force ? 1 : 0, &s));
  Json j = Json::parse(take(s));
  std::ostringstream text;
  for (const auto& cell : j["cells"]) {
    text << list_text(cell["partition"]) << " n=" << cell["n"] << " char=" << cell["char"] << " "
         << cell["clause"].get<std::string>() << " predicted=" << value_text(cell["predicted"])
         << " verified=" << value_text(cell["verified"]) << "\n";
    for (const auto& d : cell["discrepancies"]) text << "  DISCREPANCY: " << d.get<std::string>() << "\n";
  }
  text << j["cell_count"] << " cells, " << j["discrepancy_count"] << " discrepancies\n";
  emit(o, j, text.str());
}

void run_tree(const Options& o) {
  char* s = nullptr;
  check(bf_tree(o.codim, o.depth, o.max_depth, &s));
  Json j = Json::parse(take(s));
  const Json& nodes = j["nodes"];
  std::ostringstream text;
  // Depth-first, A child before Phi child.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const Json& node = nodes[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    text << std::string(2 * node["depth"].get<std::size_t>(), ' ') << list_text(node["partition"])
         << " n=" << node["n"] << " ";
    if (node["out_of_scope"].get<bool>())
      text << "out of scope";
    else
      text << node["clause"].get<std::string>() << " predicted=" << value_text(node["predicted"]);
    if (!node["enumerated"].is_null()) text << " enumerated=" << node["enumerated"];
    text << "\n";
    if (node["child_phi"].get<int>() >= 0) stack.push_back(node["child_phi"].get<int>());
    if (node["child_a"].get<int>() >= 0) stack.push_back(node["child_a"].get<int>());
  }
  emit(o, j, text.str());
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Borel-fixed points of Hilbert schemes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--seedless", o.seedless, "No randomized shortcuts (all computations are deterministic)");
  app.add_flag("--force", o.force, "Run the brute-force oracle beyond its search guard");
  app.add_option("--max-depth", o.max_depth, "Largest tree depth accepted")->check(CLI::PositiveNumber);

  auto* hp = app.add_subcommand("hp", "Hilbert polynomial of a partition or of a monomial ideal");
  hp->add_option("--partition", o.partition, "Gotzmann partition, e.g. 1,1,1,0");
  hp->add_option("--ideal", o.ideal, "Ideal, e.g. \"<x0, x1^4, x1^3*x2>\" or ideal JSON");
  hp->add_option("--n", o.n, "Ambient P^n (ring has n+1 variables)");
  hp->add_option("--reg-hint", o.reg_hint, "Lower bound for the sampling window");
  hp->add_option("--at", o.at, "Degrees at which to evaluate the partition's polynomial");

  auto* lex = app.add_subcommand("lex", "Saturated lexicographic ideal");
  lex->add_option("--partition", o.partition)->required();
  lex->add_option("--n", o.n)->required();

  auto* chk = app.add_subcommand("check-ideal", "Borel properties and Hilbert polynomial of an ideal");
  chk->add_option("--ideal", o.ideal)->required();
  chk->add_option("--n", o.n, "Ambient P^n (inferred when omitted)");
  chk->add_option("--char", o.ch, "0 or a prime");
  chk->add_option("--reg-hint", o.reg_hint);

  auto* reeves = app.add_subcommand("reeves", "Saturated strongly stable ideals by expansion and lifting");
  reeves->add_option("--partition", o.partition)->required();
  reeves->add_option("--n", o.n)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force saturated p-Borel ideals");
  oracle->add_option("--partition", o.partition)->required();
  oracle->add_option("--n", o.n)->required();
  oracle->add_option("--char", o.ch, "0 or a prime");

  auto* classify = app.add_subcommand("classify", "Predicted number of Borel-fixed points");
  classify->add_option("--partition", o.partition)->required();
  classify->add_option("--n", o.n)->required();
  classify->add_option("--char", o.ch, "0 or a prime");
  classify->add_flag("--verify", o.verify, "Also enumerate and count");
  classify->add_option("--method", o.method, "reeves, oracle or auto")
      ->check(CLI::IsMember({"reeves", "oracle", "auto"}));

  auto* verify = app.add_subcommand("verify", "Check the classification over a grid");
  verify->add_option("--grid", o.grid, "default, a JSON file, or inline JSON");
  verify->add_flag("--with-ideals", o.with_ideals, "Include the enumerated ideals");

  auto* tree = app.add_subcommand("tree", "Explore the codimension-c tree");
  tree->add_option("--codim", o.codim)->required();
  tree->add_option("--depth", o.depth)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const bool json = o.json;
    if (json) {
      Json err;
      err["error"] = {{"kind", "usage"}, {"message", e.what()}};
      err["exit_code"] = kExitUsage;
      std::cerr << err.dump() << "\n";
    } else {
      app.exit(e);
    }
    return kExitUsage;
  }

  try {
    if (*hp) run_hp(o);
    else if (*lex) run_lex(o);
    else if (*chk) run_check_ideal(o);
    else if (*reeves) run_reeves(o);
    else if (*oracle) run_oracle(o);
    else if (*classify) run_classify(o);
    else if (*verify) run_verify(o);
    else if (*tree) run_tree(o);
    return 0;
  } catch (const Failure& f) {
    if (o.json) {
      Json err;
      err["error"] = {{"kind", f.kind}, {"message", f.message}};
      err["exit_code"] = f.code;
      std::cerr << err.dump() << "\n";
    } else {
      std::cerr << "error: " << f.message << "\n";
    }
    return f.code;
  } catch (const std::exception& e) {
    if (o.json)
      std::cerr << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}, {"exit_code", 4}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
