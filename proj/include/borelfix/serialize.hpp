#pragma once

// JSON and human-readable forms.
//
//   partition   [1,1,1,0]                      outermost part first
//   ideal       {"num_vars": 4, "generators": [[1,0,0,0], [0,4,0,0], ...]}
//   human       <x0, x1^4, x1^3*x2>            '^' optional, '*' separated
//   report cell {partition, n, char, clause, predicted, verified, ideals?}

#include <string>

#include "json.hpp"

#include "borelfix/classify.hpp"

namespace borelfix {

using Json = nlohmann::ordered_json;

Json to_json(const GotzmannPartition& b);
Json to_json(const MacaulayPartition& e);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const HilbertData& data);
Json to_json(const IdealSet& ideals);
Json to_json(const ClassificationVerdict& verdict);
Json to_json(const CellReport& cell, bool with_ideals);
Json to_json(const VerificationReport& report, bool with_ideals);
Json to_json(const Tree& tree);

GotzmannPartition partition_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);

/// "1,1,0", "1 1 0" or "[1,1,0]". Throws Error(InvalidArgument).
std::vector<int> parse_int_list(const std::string& text);

std::string to_human(const Monomial& m);
std::string to_human(const MonomialIdeal& ideal);

/// Parses "x0^2*x1" ("1" is the unit monomial). Variables beyond num_vars
/// are rejected.
Monomial parse_monomial(const std::string& text, int num_vars);

/// Parses a comma-separated generator list, optionally wrapped in <> or ().
/// num_vars <= 0 infers the ring from the largest variable index used.
MonomialIdeal parse_ideal(const std::string& text, int num_vars);

/// Grid file: either {"cells": [{"partition": [...], "n": N, "char": P,
/// "method": "reeves"|"oracle"|"auto"}, ...]} or a range
/// {"max_r": R, "max_b1": B, "codims": [...], "chars": [...],
///  "method": ..., "oracle_feasible_only": bool}.
std::vector<GridCell> grid_from_json(const Json& j);

}  // namespace borelfix
