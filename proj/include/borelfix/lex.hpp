#pragma once

#include <vector>

#include "borelfix/hilbert_poly.hpp"
#include "borelfix/monomial_ideal.hpp"

namespace borelfix {

/// Count vector (a_0, ..., a_{n-1}) of a saturated lexicographic ideal in
/// K[x_0..x_n].
struct LexCounts {
  std::vector<int> a;
};

/// L(a_0, ..., a_{n-1}) = < x_0^{a_{n-1}+1}, x_0^{a_{n-1}} x_1^{a_{n-2}+1}, ...,
/// x_0^{a_{n-1}} ... x_{n-2}^{a_1} x_{n-1}^{a_0} >, minimalized.
/// All-zero counts give the unit ideal (the zero polynomial).
MonomialIdeal lex_from_counts(const LexCounts& counts);

/// a_j = number of parts of b equal to j.
LexCounts lex_counts(const GotzmannPartition& b, int n);

/// The saturated lexicographic ideal L^p_n in K[x_0..x_n]. Throws
/// Error(InvalidArgument) unless n > deg p.
MonomialIdeal lex_from_partition(const GotzmannPartition& b, int n);

}  // namespace borelfix
