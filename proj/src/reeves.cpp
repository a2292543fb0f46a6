#include "borelfix/reeves.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "borelfix/borel.hpp"
#include "borelfix/error.hpp"

namespace borelfix {

namespace {

// q - p as an integer, checked to be constant on deg + 1 sample points.
std::int64_t constant_deficit(const GotzmannPartition& target, const HilbertData& actual,
                              std::int64_t base) {
  if (!actual.polynomial)
    fail(ErrorKind::Internal, "intermediate ideal has the zero Hilbert polynomial");
  const int deg = std::max(target.degree(), actual.polynomial->degree());
  const BigInt first = evaluate(target, base) - evaluate(*actual.polynomial, base);
  for (int i = 1; i <= deg + 1; ++i) {
    const BigInt diff = evaluate(target, base + i) - evaluate(*actual.polynomial, base + i);
    if (diff != first)
      fail(ErrorKind::Internal, "Hilbert polynomial deficit is not constant");
  }
  return static_cast<std::int64_t>(first);
}

}  // namespace

IdealSet expansion_closure(const MonomialIdeal& start, std::int64_t steps,
                           const ReevesOptions& options, ReevesStats* stats) {
  IdealSet frontier{start};
  for (std::int64_t step = 0; step < steps && !frontier.empty(); ++step) {
    IdealSet next;
    for (const auto& ideal : frontier) {
      auto gens = expandable_generators(ideal);
      if (options.reverse_generator_order) std::reverse(gens.begin(), gens.end());
      if (gens.empty() && stats) ++stats->stalled_chains;
      for (const auto& g : gens) {
        next.insert(expand(ideal, g));
        if (stats) ++stats->expansions;
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

IdealSet enumerate_strongly_stable(const GotzmannPartition& b, int n, const ReevesOptions& options,
                                   ReevesStats* stats) {
  const int d = b.degree();
  if (n <= d)
    fail(ErrorKind::InvalidArgument, "ambient dimension n=" + std::to_string(n) +
                                         " must exceed the degree " + std::to_string(d));

  // targets[j] = nabla^{d-j}(b)
  std::vector<GotzmannPartition> targets(static_cast<std::size_t>(d) + 1, b);
  for (int j = d - 1; j >= 0; --j)
    targets[static_cast<std::size_t>(j)] = apply_nabla(targets[static_cast<std::size_t>(j) + 1]);

  // <x_0, ..., x_{n-d-1}> in K[x_0..x_{n-d}]
  const int start_vars = n - d + 1;
  std::vector<Monomial> linear;
  for (int i = 0; i < n - d; ++i) linear.push_back(Monomial::variable(start_vars, i));

  ReevesState state{0, targets.front(), {minimalize(std::move(linear), start_vars)}};
  for (int j = 0; j <= d; ++j) {
    state.level = j;
    state.target = targets[static_cast<std::size_t>(j)];
    IdealSet reached;
    for (const auto& stored : state.ideals) {
      const MonomialIdeal ideal = j == 0 ? stored : lift(stored);
      const HilbertData hd = hilbert_polynomial(ideal);
      const std::int64_t deficit = constant_deficit(state.target, hd, hd.stabilization_degree);
      if (deficit < 0) {
        if (stats) ++stats->dropped_negative_deficit;
        continue;
      }
      reached.merge(expansion_closure(ideal, deficit, options, stats));
    }
    state.ideals = std::move(reached);
  }
  return state.ideals;
}

}  // namespace borelfix
