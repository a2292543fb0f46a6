#include "borelfix/lex.hpp"

#include <algorithm>
#include <string>

#include "borelfix/error.hpp"

namespace borelfix {

MonomialIdeal lex_from_counts(const LexCounts& counts) {
  const int n = static_cast<int>(counts.a.size());
  const int num_vars = n + 1;
  for (int v : counts.a)
    if (v < 0) fail(ErrorKind::InvalidArgument, "lex counts must be nonnegative");

  auto a = [&](int j) { return counts.a[static_cast<std::size_t>(j)]; };
  std::vector<Monomial> gens;
  std::vector<int> prefix(static_cast<std::size_t>(num_vars), 0);
  for (int k = 0; k <= n - 2; ++k) {
    auto e = prefix;
    e[static_cast<std::size_t>(k)] = a(n - 1 - k) + 1;
    gens.emplace_back(std::move(e));
    prefix[static_cast<std::size_t>(k)] = a(n - 1 - k);
  }
  if (n >= 1) {
    prefix[static_cast<std::size_t>(n - 1)] = a(0);
    gens.emplace_back(prefix);
  } else {
    gens.push_back(Monomial::one(num_vars));
  }
  return minimalize(std::move(gens), num_vars);
}

LexCounts lex_counts(const GotzmannPartition& b, int n) {
  LexCounts counts{std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 0)};
  for (int part : b.parts())
    if (part < n) ++counts.a[static_cast<std::size_t>(part)];
  return counts;
}

MonomialIdeal lex_from_partition(const GotzmannPartition& b, int n) {
  if (n <= b.degree())
    fail(ErrorKind::InvalidArgument, "ambient dimension n=" + std::to_string(n) +
                                         " must exceed the degree " + std::to_string(b.degree()));
  return lex_from_counts(lex_counts(b, n));
}

}  // namespace borelfix
