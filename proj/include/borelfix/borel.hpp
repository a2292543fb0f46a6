#pragma once

#include <vector>

#include "borelfix/monomial_ideal.hpp"

namespace borelfix {

/// Characteristic of the base field: 0 or a prime. Characteristic 0 selects
/// strongly stable (single exchange) semantics, a prime p selects p-Borel
/// semantics.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  /// Throws Error(InvalidArgument) unless value is 0 or prime.
  explicit Characteristic(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(Characteristic, Characteristic) = default;

 private:
  int value_ = 0;
};

/// k <=_p l: base-p digits of k are dominated by those of l. In
/// characteristic 0 only the exchanges k = 0 and k = 1 <= l are allowed.
bool leq_p(int k, int l, Characteristic ch);

/// Calls visit(target) for every Borel move x_j^{-k} x_i^k m with i < j,
/// 1 <= k <= u_j and k <=_p u_j.
template <typename Visit>
void for_each_borel_move(const Monomial& m, Characteristic ch, Visit&& visit) {
  const int nv = m.num_vars();
  for (int j = 1; j < nv; ++j) {
    const int uj = m[static_cast<std::size_t>(j)];
    for (int k = 1; k <= uj; ++k) {
      if (!leq_p(k, uj, ch)) continue;
      for (int i = 0; i < j; ++i) visit(m.times(j, -k).times(i, k));
    }
  }
}

/// Pardue's criterion checked on the minimal generators. Characteristic 0
/// makes this identical to is_strongly_stable.
bool is_p_borel(const MonomialIdeal& ideal, Characteristic ch);

bool is_strongly_stable(const MonomialIdeal& ideal);

/// Smallest strongly stable (ch = 0) or p-Borel ideal containing `gens`.
MonomialIdeal borel_closure(const std::vector<Monomial>& gens, Characteristic ch, int num_vars);

/// Generators g of a saturated strongly stable ideal such that no
/// x_i^{-1} x_{i+1} g (x_i | g, 0 <= i < n-1) is a minimal generator.
std::vector<Monomial> expandable_generators(const MonomialIdeal& ideal);

/// Replaces the expandable generator g by g x_j for max g <= j <= n-1.
/// Throws Error(InvalidArgument) when g is not expandable.
MonomialIdeal expand(const MonomialIdeal& ideal, const Monomial& g);

}  // namespace borelfix
