#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borelfix/borel.hpp"
#include "borelfix/oracle.hpp"
#include "borelfix/reeves.hpp"

namespace borelfix {

/// A Hilbert scheme Hilb^p(P^n) over a field of the given characteristic.
struct SchemeCoordinates {
  /// Throws Error(InvalidArgument) unless n > deg p.
  SchemeCoordinates(GotzmannPartition partition, int n, Characteristic ch = {});

  GotzmannPartition partition;
  int n;
  Characteristic ch;

  int codim() const noexcept { return n - partition.degree(); }
};

/// Clause label when the lexicographic point is the only Borel-fixed point.
/// Labels: "unique(i)" .. "unique(iv)".
std::optional<std::string> predicate_unique(const SchemeCoordinates& coords);

/// Clause label ("(i)(a)", "(i)(a')", ..., "(ii)(c)") when the scheme has
/// exactly two Borel-fixed points. Throws Error(Domain, "out of scope: c <= 1")
/// for codimension 1.
std::optional<std::string> predicate_two(const SchemeCoordinates& coords);

/// Label for the known three-point families (d,d,1,0), d > 1, and
/// (1,1,1,0). Same scope rule as predicate_two.
std::optional<std::string> predicate_three_family(const SchemeCoordinates& coords);

struct ClassificationVerdict {
  /// 1, 2 or 3; nullopt means "at least three or unknown".
  std::optional<int> predicted;
  std::string matched_clause;
  std::optional<int> verified_count;
};

/// Throws Error(Domain, "out of scope: c <= 1") in codimension 1, even where
/// predicate_unique alone would decide.
ClassificationVerdict predict(const SchemeCoordinates& coords);

enum class CountMethod { Reeves, Oracle, Auto };

const char* to_string(CountMethod method);
CountMethod count_method_from_string(const std::string& name);

struct CountResult {
  int count = 0;
  IdealSet ideals;
  CountMethod used = CountMethod::Reeves;
};

/// Enumerates the Borel-fixed points. Reeves enumeration requires
/// characteristic 0; Auto uses Reeves in characteristic 0 and the oracle
/// otherwise.
CountResult count_borel_fixed(const SchemeCoordinates& coords, CountMethod method,
                              const OracleOptions& oracle_options = {});

struct GridCell {
  SchemeCoordinates coords;
  CountMethod method = CountMethod::Auto;
};

/// Every Gotzmann partition with r <= max_r and b_1 <= max_b1, in each
/// codimension and characteristic listed. Cells whose oracle run would trip
/// the feasibility guard are skipped when only_oracle_feasible is set.
std::vector<GridCell> make_grid(int max_r, int max_b1, const std::vector<int>& codims,
                                const std::vector<int>& chars, CountMethod method,
                                bool only_oracle_feasible = false,
                                const OracleOptions& oracle_options = {});

/// Char-0 Reeves cells for r <= 6, b_1 <= 3, c in {2, 3}, followed by the
/// oracle-feasible cells in characteristics 0, 2 and 3.
std::vector<GridCell> default_grid();

struct CellReport {
  SchemeCoordinates coords;
  CountMethod method;
  ClassificationVerdict verdict;
  std::optional<std::string> unique_clause;
  std::optional<std::string> two_clause;
  std::optional<std::string> three_clause;
  IdealSet ideals;
  std::vector<std::string> discrepancies;
};

struct VerificationReport {
  std::vector<CellReport> cells;
  std::size_t discrepancy_count() const;
};

/// For every cell: (count == 1) iff predicate_unique, (count == 2) iff
/// predicate_two, and predicate_three_family implies count == 3.
VerificationReport verify_classification(const std::vector<GridCell>& grid,
                                         const OracleOptions& oracle_options = {});

/// Children of Hilb^p(P^n) in the codimension-c tree: Hilb^{A(p)}(P^n) and
/// Hilb^{Phi(p)}(P^{n+1}).
std::pair<SchemeCoordinates, SchemeCoordinates> tree_children(const SchemeCoordinates& coords);

struct TreeNode {
  GotzmannPartition partition;
  int n;
  int depth;
  /// Index of the A child and Phi child in Tree::nodes, -1 at the frontier.
  int child_a = -1;
  int child_phi = -1;
  std::optional<int> predicted;
  std::string clause;
  bool out_of_scope = false;
  std::optional<int> enumerated;
};

struct Tree {
  int codim;
  int depth;
  std::vector<TreeNode> nodes;  // nodes[0] is the root P^c
};

struct TreeOptions {
  int max_depth = 10;
  /// Nodes with r <= this and n <= enumerate_max_n get a Reeves count.
  int enumerate_max_r = 6;
  int enumerate_max_n = 6;
};

/// Breadth-first expansion of the codimension-c tree down to `depth`.
/// Throws Error(InvalidArgument) beyond options.max_depth.
Tree tree_explore(int codim, int depth, const TreeOptions& options = {});

}  // namespace borelfix
