#include "borelfix/borel.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "borelfix/error.hpp"

namespace borelfix {

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

Characteristic::Characteristic(int value) : value_(value) {
  if (value != 0 && !is_prime(value))
    fail(ErrorKind::InvalidArgument,
         "characteristic must be 0 or a prime, got " + std::to_string(value));
}

bool leq_p(int k, int l, Characteristic ch) {
  if (k < 0 || l < 0) return false;
  if (ch.is_zero()) return k == 0 || (k == 1 && l >= 1);
  const int p = ch.value();
  while (k > 0 || l > 0) {
    if (k % p > l % p) return false;
    k /= p;
    l /= p;
  }
  return true;
}

bool is_p_borel(const MonomialIdeal& ideal, Characteristic ch) {
  for (const auto& g : ideal.generators()) {
    bool closed = true;
    for_each_borel_move(g, ch, [&](const Monomial& target) {
      closed = closed && contains(ideal, target);
    });
    if (!closed) return false;
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) { return is_p_borel(ideal, Characteristic{}); }

MonomialIdeal borel_closure(const std::vector<Monomial>& gens, Characteristic ch, int num_vars) {
  MonomialIdeal current = minimalize(gens, num_vars);
  // Moves preserve degree, so the closure is reached after finitely many
  // rounds over the (re-minimalized) generators.
  for (;;) {
    std::vector<Monomial> missing;
    for (const auto& g : current.generators())
      for_each_borel_move(g, ch, [&](const Monomial& target) {
        if (!contains(current, target)) missing.push_back(target);
      });
    if (missing.empty()) return current;
    auto next = current.generators();
    next.insert(next.end(), missing.begin(), missing.end());
    current = minimalize(std::move(next), num_vars);
  }
}

std::vector<Monomial> expandable_generators(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars() - 1;
  const auto& gens = ideal.generators();
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool expandable = true;
    for (int i = 0; i < n - 1 && expandable; ++i) {
      if (g[static_cast<std::size_t>(i)] == 0) continue;
      const Monomial shifted = g.times(i, -1).times(i + 1, 1);
      expandable = !std::binary_search(gens.begin(), gens.end(), shifted);
    }
    if (expandable) out.push_back(g);
  }
  return out;
}

MonomialIdeal expand(const MonomialIdeal& ideal, const Monomial& g) {
  const int n = ideal.num_vars() - 1;
  const auto candidates = expandable_generators(ideal);
  if (std::find(candidates.begin(), candidates.end(), g) == candidates.end())
    fail(ErrorKind::InvalidArgument, "generator is not expandable");
  if (g[static_cast<std::size_t>(n)] > 0)
    fail(ErrorKind::InvalidArgument, "cannot expand a generator divisible by the last variable");

  std::vector<Monomial> next;
  for (const auto& h : ideal.generators())
    if (h != g) next.push_back(h);
  for (int j = std::max(g.max_index(), 0); j <= n - 1; ++j) next.push_back(g.times(j));
  return minimalize(std::move(next), ideal.num_vars());
}

}  // namespace borelfix
