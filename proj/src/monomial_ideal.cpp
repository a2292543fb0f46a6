#include "borelfix/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "borelfix/error.hpp"

namespace borelfix {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(int num_vars, int index, int power) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e.at(static_cast<std::size_t>(index)) = power;
  return Monomial(std::move(e));
}

int Monomial::max_index() const noexcept {
  for (int i = num_vars() - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  return -1;
}

int Monomial::min_index() const noexcept {
  for (int i = 0; i < num_vars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(int index, int power) const {
  auto e = exps_;
  e.at(static_cast<std::size_t>(index)) += power;
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Lex-larger exponent vectors come first.
  return b.exps_ <=> a.exps_;
}

bool lex_greater(const Monomial& a, const Monomial& b) { return a.exponents() > b.exponents(); }

MonomialIdeal MonomialIdeal::unit(int num_vars) {
  return minimalize({Monomial::one(num_vars)}, num_vars);
}

int MonomialIdeal::max_generator_degree() const noexcept {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                                                b.gens_.end());
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int num_vars) {
  for (const auto& g : gens)
    if (g.num_vars() != num_vars)
      fail(ErrorKind::InvalidArgument, "monomial has " + std::to_string(g.num_vars()) +
                                           " variables, ring has " + std::to_string(num_vars));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal(num_vars);
  for (auto& g : gens) {
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) ideal.gens_.push_back(std::move(g));
  }
  return ideal;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.num_vars() != ideal.num_vars())
    fail(ErrorKind::InvalidArgument, "membership test across rings of different size");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

namespace {

using Counts = std::vector<std::int64_t>;
using ExponentSet = std::vector<std::vector<int>>;

// Counts standard monomials of degree 0..top in `k` variables by splitting on
// the exponent e of the last variable: the monomials x^v x_{k-1}^e outside I
// are those with x^v outside the ideal of generators whose last exponent is
// at most e.
class StandardCounter {
 public:
  explicit StandardCounter(int top) : top_(top) {}

  const Counts& count(const ExponentSet& gens, int k) {
    auto key = std::make_pair(k, gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Counts result = compute(gens, k);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  static ExponentSet reduce(ExponentSet gens) {
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
      const int da = std::accumulate(a.begin(), a.end(), 0);
      const int db = std::accumulate(b.begin(), b.end(), 0);
      return da != db ? da < db : a > b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    ExponentSet kept;
    for (auto& g : gens) {
      const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& h) {
        for (std::size_t i = 0; i < g.size(); ++i)
          if (h[i] > g[i]) return false;
        return true;
      });
      if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
  }

  Counts compute(const ExponentSet& gens, int k) {
    Counts out(static_cast<std::size_t>(top_) + 1, 0);
    for (const auto& g : gens)
      if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return out;
    if (k == 0) {
      out[0] = 1;
      return out;
    }
    if (gens.empty()) {
      // C(t + k - 1, k - 1)
      for (int t = 0; t <= top_; ++t) {
        std::int64_t c = 1;
        for (int i = 1; i <= k - 1; ++i) c = c * (t + i) / i;
        out[static_cast<std::size_t>(t)] = c;
      }
      return out;
    }
    int max_last = 0;
    for (const auto& g : gens) max_last = std::max(max_last, g.back());
    for (int e = 0; e <= std::min(max_last, top_); ++e) {
      ExponentSet sub;
      for (const auto& g : gens)
        if (g.back() <= e) sub.emplace_back(g.begin(), g.end() - 1);
      const Counts& inner = count(reduce(std::move(sub)), k - 1);
      if (e < max_last) {
        for (int t = e; t <= top_; ++t)
          out[static_cast<std::size_t>(t)] += inner[static_cast<std::size_t>(t - e)];
      } else {
        // Every e' >= max_last sees the same colon ideal.
        std::int64_t prefix = 0;
        for (int t = e; t <= top_; ++t) {
          prefix += inner[static_cast<std::size_t>(t - e)];
          out[static_cast<std::size_t>(t)] += prefix;
        }
      }
    }
    return out;
  }

  int top_;
  std::map<std::pair<int, ExponentSet>, Counts> memo_;
};

}  // namespace

std::vector<std::int64_t> hilbert_function_values(const MonomialIdeal& ideal, int max_degree) {
  if (max_degree < 0) fail(ErrorKind::InvalidArgument, "negative degree in Hilbert function");
  ExponentSet gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  StandardCounter counter(max_degree);
  return counter.count(gens, ideal.num_vars());
}

std::int64_t hilbert_function(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) return 0;
  return hilbert_function_values(ideal, degree).back();
}

HilbertData hilbert_polynomial(const MonomialIdeal& ideal, std::optional<int> reg_hint) {
  const int num_vars = ideal.num_vars();
  const int width = (num_vars - 1) + 3;  // degree of S/I is at most n
  constexpr int kVerify = 3;
  constexpr int kMaxDoublings = 3;

  int base = std::max(reg_hint.value_or(0), ideal.max_generator_degree() + num_vars);
  base = std::max(base, 1);
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, base *= 2) {
    const int top = base + width + kVerify - 1;
    const auto h = hilbert_function_values(ideal, top);

    HilbertData data{ideal, {}, std::nullopt, 0, attempt};
    for (int t = 0; t <= top; ++t) data.function_values[t] = h[static_cast<std::size_t>(t)];

    const bool vanishes = std::all_of(h.begin() + base, h.end(), [](auto v) { return v == 0; });
    if (vanishes) {
      int stab = base;
      while (stab > 0 && h[static_cast<std::size_t>(stab) - 1] == 0) --stab;
      data.stabilization_degree = stab;
      return data;
    }

    SampledPolynomial window{base, {}};
    for (int t = base; t < base + width; ++t) window.values.emplace_back(h[static_cast<std::size_t>(t)]);
    std::optional<GotzmannPartition> peeled;
    try {
      peeled = peel_to_partition(window);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
      continue;
    }
    bool agrees = true;
    for (int t = base + width; t <= top; ++t)
      agrees = agrees && evaluate(*peeled, t) == h[static_cast<std::size_t>(t)];
    if (!agrees) continue;

    int stab = base;
    while (stab > 0 && evaluate(*peeled, stab - 1) == h[static_cast<std::size_t>(stab) - 1]) --stab;
    data.stabilization_degree = stab;
    data.polynomial = std::move(peeled);
    return data;
  }
  fail(ErrorKind::Domain, "unstable window: Hilbert function did not settle after " +
                              std::to_string(kMaxDoublings) + " doublings");
}

MonomialIdeal saturate_wrt(const MonomialIdeal& ideal, int k) {
  if (k < 0 || k >= ideal.num_vars())
    fail(ErrorKind::InvalidArgument, "saturation variable out of range");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.times(k, -g[static_cast<std::size_t>(k)]));
  return minimalize(std::move(gens), ideal.num_vars());
}

MonomialIdeal lift(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    auto e = g.exponents();
    e.push_back(0);
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ideal.num_vars() + 1);
}

MonomialIdeal nabla_ideal(const MonomialIdeal& ideal) {
  const int num_vars = ideal.num_vars();
  if (num_vars < 2) fail(ErrorKind::InvalidArgument, "nabla needs at least two variables");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(g.exponents().begin(), g.exponents().end() - 2);
    e.push_back(0);
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), num_vars - 1);
}

}  // namespace borelfix
