#include "borelfix/classify.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "borelfix/error.hpp"

namespace borelfix {

namespace {

bool all_equal(const std::vector<int>& b, std::size_t count, int value) {
  return std::all_of(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(count),
                     [value](int v) { return v == value; });
}

void require_codim_two(const SchemeCoordinates& coords) {
  if (coords.codim() <= 1) fail(ErrorKind::Domain, "out of scope: c <= 1");
}

// All weakly decreasing sequences of length r with entries in [0, max_part].
void partitions_in_box(int r, int max_part, std::vector<int>& prefix,
                       std::vector<GotzmannPartition>& out) {
  if (static_cast<int>(prefix.size()) == r) {
    out.emplace_back(prefix);
    return;
  }
  const int bound = prefix.empty() ? max_part : prefix.back();
  for (int v = bound; v >= 0; --v) {
    prefix.push_back(v);
    partitions_in_box(r, max_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SchemeCoordinates::SchemeCoordinates(GotzmannPartition p, int ambient, Characteristic c)
    : partition(std::move(p)), n(ambient), ch(c) {
  if (n <= partition.degree())
    fail(ErrorKind::InvalidArgument, "ambient dimension n=" + std::to_string(n) +
                                         " must exceed the degree " +
                                         std::to_string(partition.degree()));
}

std::optional<std::string> predicate_unique(const SchemeCoordinates& coords) {
  const auto& b = coords.partition.parts();
  const int r = static_cast<int>(b.size());
  const int c = coords.codim();
  if (b.back() > 0) return "unique(i)";
  if (c >= 2 && r <= 2) return "unique(ii)";
  if (c == 1 && b.front() == b.back()) return "unique(iii)";
  if (c == 1) {
    const auto s = std::count(b.begin(), b.end(), b.front());
    if (r - s <= 2) return "unique(iv)";
  }
  return std::nullopt;
}

std::optional<std::string> predicate_two(const SchemeCoordinates& coords) {
  require_codim_two(coords);
  const auto& b = coords.partition.parts();
  const std::size_t r = b.size();
  const int b1 = b.front();

  if (b1 == 0 && r == 3) return "(i)(a)";
  if (b1 == 0 && r == 4 && coords.n == 2 && coords.ch.value() != 2) return "(i)(a')";
  if (r >= 2 && b.back() == 0) {
    const std::size_t a = r - 1;
    if (all_equal(b, a, 1) && a != 1 && a != 3) return "(i)(b)";
    if (b1 >= 2 && all_equal(b, a, b1) && a != 1) return "(i)(c)";
  }
  if (r == 3 && b1 > 0 && b[1] == 0) return "(ii)(a)";
  if (r >= 3 && b.back() == 0) {
    const std::size_t a = r - 2;
    const int next = b[a];
    if (all_equal(b, a, b1) && b1 > next) {
      if (next == 1 && a != 2) return "(ii)(b)";
      if (next >= 2) return "(ii)(c)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> predicate_three_family(const SchemeCoordinates& coords) {
  require_codim_two(coords);
  const auto& b = coords.partition.parts();
  if (b.size() != 4 || b[2] != 1 || b[3] != 0 || b[0] != b[1]) return std::nullopt;
  if (b[0] > 1) return "three(d,d,1,0)";
  if (b[0] == 1) return "three(1,1,1,0)";
  return std::nullopt;
}

ClassificationVerdict predict(const SchemeCoordinates& coords) {
  if (coords.codim() <= 1) fail(ErrorKind::Domain, "out of scope: c <= 1");
  if (auto clause = predicate_unique(coords)) return {1, *clause, std::nullopt};
  if (auto clause = predicate_two(coords)) return {2, *clause, std::nullopt};
  if (auto clause = predicate_three_family(coords)) return {3, *clause, std::nullopt};
  return {std::nullopt, "none", std::nullopt};
}

const char* to_string(CountMethod method) {
  switch (method) {
    case CountMethod::Reeves: return "reeves";
    case CountMethod::Oracle: return "oracle";
    case CountMethod::Auto: return "auto";
  }
  return "auto";
}

CountMethod count_method_from_string(const std::string& name) {
  if (name == "reeves") return CountMethod::Reeves;
  if (name == "oracle") return CountMethod::Oracle;
  if (name == "auto") return CountMethod::Auto;
  fail(ErrorKind::InvalidArgument, "unknown count method '" + name + "'");
}

CountResult count_borel_fixed(const SchemeCoordinates& coords, CountMethod method,
                              const OracleOptions& oracle_options) {
  if (method == CountMethod::Auto)
    method = coords.ch.is_zero() ? CountMethod::Reeves : CountMethod::Oracle;
  CountResult result;
  result.used = method;
  if (method == CountMethod::Reeves) {
    if (!coords.ch.is_zero())
      fail(ErrorKind::InvalidArgument,
           "reeves enumerates strongly stable ideals only; use the oracle in positive "
           "characteristic");
    result.ideals = enumerate_strongly_stable(coords.partition, coords.n);
  } else {
    result.ideals = enumerate_p_borel(coords.partition, coords.n, coords.ch, oracle_options);
  }
  result.count = static_cast<int>(result.ideals.size());
  return result;
}

std::vector<GridCell> make_grid(int max_r, int max_b1, const std::vector<int>& codims,
                                const std::vector<int>& chars, CountMethod method,
                                bool only_oracle_feasible, const OracleOptions& oracle_options) {
  std::vector<GotzmannPartition> partitions;
  for (int r = 1; r <= max_r; ++r) {
    std::vector<int> prefix;
    partitions_in_box(r, max_b1, prefix, partitions);
  }
  std::vector<GridCell> grid;
  for (int ch : chars)
    for (int c : codims)
      for (const auto& b : partitions) {
        const int n = b.degree() + c;
        if (only_oracle_feasible && (n > oracle_options.max_n ||
                                     b.gotzmann_number() > oracle_options.max_gotzmann_number))
          continue;
        grid.push_back({SchemeCoordinates(b, n, Characteristic(ch)), method});
      }
  return grid;
}

std::vector<GridCell> default_grid() {
  auto grid = make_grid(6, 3, {2, 3}, {0}, CountMethod::Reeves);
  auto oracle = make_grid(6, 3, {2, 3}, {0, 2, 3}, CountMethod::Oracle, true);
  grid.insert(grid.end(), oracle.begin(), oracle.end());
  return grid;
}

std::size_t VerificationReport::discrepancy_count() const {
  std::size_t total = 0;
  for (const auto& cell : cells) total += cell.discrepancies.size();
  return total;
}

VerificationReport verify_classification(const std::vector<GridCell>& grid,
                                         const OracleOptions& oracle_options) {
  VerificationReport report;
  for (const auto& cell : grid) {
    CellReport out{cell.coords, cell.method, predict(cell.coords), {}, {}, {}, {}, {}};
    out.unique_clause = predicate_unique(cell.coords);
    out.two_clause = predicate_two(cell.coords);
    out.three_clause = predicate_three_family(cell.coords);
    CountResult counted = count_borel_fixed(cell.coords, cell.method, oracle_options);
    out.method = counted.used;
    out.verdict.verified_count = counted.count;
    out.ideals = std::move(counted.ideals);

    const int count = counted.count;
    const std::string got = " (enumerated " + std::to_string(count) + ")";
    if ((count == 1) != out.unique_clause.has_value())
      out.discrepancies.push_back(out.unique_clause ? "unique predicate holds" + got
                                                    : "single point but unique predicate fails" + got);
    if ((count == 2) != out.two_clause.has_value())
      out.discrepancies.push_back(out.two_clause ? "two-point predicate holds" + got
                                                 : "two points but two-point predicate fails" + got);
    if (out.three_clause && count != 3)
      out.discrepancies.push_back("three-point family" + got);
    if (out.verdict.predicted && *out.verdict.predicted != count)
      out.discrepancies.push_back("predicted " + std::to_string(*out.verdict.predicted) + got);
    report.cells.push_back(std::move(out));
  }
  return report;
}

std::pair<SchemeCoordinates, SchemeCoordinates> tree_children(const SchemeCoordinates& coords) {
  return {SchemeCoordinates(apply_A(coords.partition), coords.n, coords.ch),
          SchemeCoordinates(apply_Phi(coords.partition), coords.n + 1, coords.ch)};
}

Tree tree_explore(int codim, int depth, const TreeOptions& options) {
  if (codim < 1) fail(ErrorKind::InvalidArgument, "codimension must be positive");
  if (depth < 0 || depth > options.max_depth)
    fail(ErrorKind::InvalidArgument, "tree depth " + std::to_string(depth) +
                                         " exceeds the cap " + std::to_string(options.max_depth));
  Tree tree{codim, depth, {}};
  auto annotate = [&](TreeNode& node) {
    const SchemeCoordinates coords(node.partition, node.n);
    try {
      const auto verdict = predict(coords);
      node.predicted = verdict.predicted;
      node.clause = verdict.matched_clause;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
      node.out_of_scope = true;
      node.clause = "out of scope";
    }
    if (node.partition.gotzmann_number() <= options.enumerate_max_r &&
        node.n <= options.enumerate_max_n)
      node.enumerated =
          static_cast<int>(enumerate_strongly_stable(node.partition, node.n).size());
  };

  auto make_node = [](GotzmannPartition partition, int n, int node_depth) {
    TreeNode node{std::move(partition), n, node_depth, -1, -1, std::nullopt, {}, false, std::nullopt};
    return node;
  };

  tree.nodes.push_back(make_node(GotzmannPartition({0}), codim, 0));
  annotate(tree.nodes.back());
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int index = queue.front();
    queue.pop_front();
    if (tree.nodes[static_cast<std::size_t>(index)].depth == depth) continue;
    const TreeNode parent = tree.nodes[static_cast<std::size_t>(index)];
    const auto children = tree_children(SchemeCoordinates(parent.partition, parent.n));
    for (int which = 0; which < 2; ++which) {
      const SchemeCoordinates& child = which == 0 ? children.first : children.second;
      TreeNode node = make_node(child.partition, child.n, parent.depth + 1);
      annotate(node);
      const int child_index = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(node));
      auto& p = tree.nodes[static_cast<std::size_t>(index)];
      (which == 0 ? p.child_a : p.child_phi) = child_index;
      queue.push_back(child_index);
    }
  }
  return tree;
}

}  // namespace borelfix
