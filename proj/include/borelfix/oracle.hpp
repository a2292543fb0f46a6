#pragma once

#include <cstdint>

#include "borelfix/borel.hpp"
#include "borelfix/reeves.hpp"

namespace borelfix {

struct OracleOptions {
  /// Skip the feasibility guard below.
  bool force = false;
  int max_n = 3;
  int max_gotzmann_number = 5;
};

struct OracleStats {
  std::int64_t closed_sets = 0;   // degree components visited
  std::int64_t pruned = 0;        // partial ideals rejected by Hilbert function bounds
  std::int64_t candidates = 0;    // complete generator sets tested
};

/// Brute-force enumeration of every saturated p-Borel (strongly stable when
/// ch = 0) ideal of K[x_0..x_n] with Hilbert polynomial b. Generators are
/// searched degree by degree up to the Gotzmann number r; each degree
/// component is a Borel-closed set of monomials avoiding x_n.
///
/// Throws Error(Feasibility, "search bound exceeded") when n or r exceed the
/// guard and options.force is off, and Error(InvalidArgument) unless n > deg b.
IdealSet enumerate_p_borel(const GotzmannPartition& b, int n, Characteristic ch,
                           const OracleOptions& options = {}, OracleStats* stats = nullptr);

}  // namespace borelfix
