#pragma once

#include <cstdint>
#include <set>

#include "borelfix/hilbert_poly.hpp"
#include "borelfix/monomial_ideal.hpp"

namespace borelfix {

using IdealSet = std::set<MonomialIdeal>;

struct ReevesOptions {
  /// Visit expandable generators last-to-first. The output set does not
  /// depend on this; it exists so callers can check that.
  bool reverse_generator_order = false;
};

struct ReevesStats {
  std::int64_t expansions = 0;
  std::int64_t dropped_negative_deficit = 0;
  std::int64_t stalled_chains = 0;
};

/// One level of the expansion-and-lifting recursion: the target polynomial
/// q_j = nabla^{d-j}(p) and the saturated strongly stable ideals with that
/// Hilbert polynomial in K[x_0..x_{n-d+j}].
struct ReevesState {
  int level = 0;
  GotzmannPartition target;
  IdealSet ideals;
};

/// All saturated strongly stable ideals of K[x_0..x_n] with Hilbert
/// polynomial b. Throws Error(InvalidArgument) unless n > deg b.
IdealSet enumerate_strongly_stable(const GotzmannPartition& b, int n,
                                   const ReevesOptions& options = {},
                                   ReevesStats* stats = nullptr);

/// Every ideal reachable from `start` by exactly `steps` expansions.
IdealSet expansion_closure(const MonomialIdeal& start, std::int64_t steps,
                           const ReevesOptions& options = {}, ReevesStats* stats = nullptr);

}  // namespace borelfix
