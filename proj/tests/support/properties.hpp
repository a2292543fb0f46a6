#pragma once

// Grid-wide invariants. Each suite returns the list of violations found;
// an empty list means the suite holds on its whole grid.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "borelfix/borel.hpp"
#include "borelfix/classify.hpp"
#include "borelfix/lex.hpp"
#include "borelfix/oracle.hpp"
#include "borelfix/reeves.hpp"
#include "borelfix/serialize.hpp"
#include "support/oracles.hpp"

namespace props {

using borelfix::GotzmannPartition;
using borelfix::IdealSet;
using borelfix::MonomialIdeal;
using Violations = std::vector<std::string>;

inline std::string show(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

inline std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> out;
  for (int k = 1;; ++k) {
    int count = 0;
    for (int v : parts) count += v >= k;
    if (count == 0) return out;
    out.push_back(count);
  }
}

// Records every enumerated ideal whose generators exceed the Gotzmann number.
struct DegreeBound {
  long long checked = 0;
  Violations violations;

  void record(const GotzmannPartition& b, int n, const IdealSet& ideals) {
    for (const auto& ideal : ideals) {
      ++checked;
      if (ideal.max_generator_degree() > b.gotzmann_number())
        violations.push_back(show(b.parts()) + " n=" + std::to_string(n) + ": " +
                             borelfix::to_human(ideal) + " has a generator of degree " +
                             std::to_string(ideal.max_generator_degree()));
    }
  }
};

// Partition calculus on r <= 8, b_1 <= 4.
inline Violations partition_round_trips() {
  using namespace borelfix;
  Violations bad;
  std::set<std::vector<long long>> images;
  const auto grid = oracle::partitions(8, 4);
  for (const auto& raw : grid) {
    const GotzmannPartition b(raw);
    const auto e = to_macaulay(b);
    std::vector<int> expected{static_cast<int>(raw.size())};
    for (int v : conjugate(raw)) expected.push_back(v);
    if (e.parts() != expected) bad.push_back(show(raw) + ": Macaulay partition " + show(e.parts()));
    if (from_macaulay(e) != b) bad.push_back(show(raw) + ": Macaulay round trip");
    if (to_macaulay(from_macaulay(e)).parts() != e.parts())
      bad.push_back(show(raw) + ": Gotzmann round trip of the Macaulay partition");
    std::vector<int> positive;
    for (int v : raw)
      if (v > 0) positive.push_back(v);
    if (conjugate(conjugate(raw)) != positive) bad.push_back(show(raw) + ": conjugation is not an involution");

    std::vector<long long> values;
    for (int t = 0; t <= 10; ++t) {
      const long long g = oracle::gotzmann_value(raw, t);
      if (oracle::macaulay_value(e.parts(), t) != g)
        bad.push_back(show(raw) + ": expressions disagree at t=" + std::to_string(t));
      if (static_cast<long long>(evaluate(b, t)) != g)
        bad.push_back(show(raw) + ": evaluate disagrees at t=" + std::to_string(t));
      values.push_back(g);
    }
    images.insert(values);
    if (peel_to_partition(sample(b, 12, b.degree() + 3)) != b) bad.push_back(show(raw) + ": peel");
  }
  if (images.size() != grid.size()) bad.push_back("distinct partitions share a polynomial");
  return bad;
}

// Lexicographic ideals on r <= 6, b_1 <= 3, n in {d+1, d+2, d+3}.
inline Violations lex_identities() {
  using namespace borelfix;
  Violations bad;
  for (const auto& raw : oracle::partitions(6, 3)) {
    const GotzmannPartition b(raw);
    for (int n = b.degree() + 1; n <= b.degree() + 3; ++n) {
      const std::string where = show(raw) + " n=" + std::to_string(n) + ": ";
      const auto lex = lex_from_partition(b, n);
      const auto counts = lex_counts(b, n).a;
      if (oracle::gen_set(lex) != oracle::lex_minimal_generators(counts, n, b.degree()))
        bad.push_back(where + "minimal generators");
      const auto hp = hilbert_polynomial(lex).polynomial;
      if (!hp || *hp != b) bad.push_back(where + "Hilbert polynomial");
      auto a_counts = counts;
      ++a_counts[0];
      const auto a_lex = lex_from_partition(apply_A(b), n);
      if (a_lex != lex_from_counts({a_counts})) bad.push_back(where + "A on counts");
      if (a_lex != expand(lex, lex.generators().back())) bad.push_back(where + "A as expansion");
      auto phi_counts = counts;
      phi_counts.insert(phi_counts.begin(), 0);
      const auto phi_lex = lex_from_partition(apply_Phi(b), n + 1);
      if (phi_lex != lift(lex)) bad.push_back(where + "Phi as lift");
      if (phi_lex != lex_from_counts({phi_counts})) bad.push_back(where + "Phi on counts");
    }
  }
  return bad;
}

struct SweepCell {
  GotzmannPartition b;
  int n;
  IdealSet ideals;
};

// Reeves output on every cell r <= 6, b_1 <= 3, c in {2, 3}.
inline std::vector<SweepCell> reeves_sweep() {
  std::vector<SweepCell> cells;
  for (const auto& raw : oracle::partitions(6, 3))
    for (int c : {2, 3}) {
      const GotzmannPartition b(raw);
      const int n = b.degree() + c;
      cells.push_back({b, n, borelfix::enumerate_strongly_stable(b, n)});
    }
  return cells;
}

// Identities relating an ideal, its Hilbert polynomial, nabla, lift and
// expansion, on every saturated strongly stable ideal of the sweep.
inline Violations hilbert_borel_identities(const std::vector<SweepCell>& cells) {
  using namespace borelfix;
  Violations bad;
  for (const auto& cell : cells)
    for (const auto& ideal : cell.ideals) {
      const std::string where =
          show(cell.b.parts()) + " n=" + std::to_string(cell.n) + " " + to_human(ideal) + ": ";
      const auto p = hilbert_polynomial(ideal).polynomial;
      if (!p || *p != cell.b) {
        bad.push_back(where + "Hilbert polynomial");
        continue;
      }
      // nabla(I) has Hilbert polynomial nabla(p); constants go to zero.
      const auto np = hilbert_polynomial(nabla_ideal(ideal)).polynomial;
      if (p->degree() == 0 ? np.has_value() : (!np || *np != apply_nabla(*p)))
        bad.push_back(where + "nabla");
      // p of the lift is A^j Phi(p) for some j >= 0.
      const auto lp = hilbert_polynomial(lift(ideal)).polynomial;
      const auto phi = apply_Phi(*p).parts();
      bool shape = lp && lp->size() >= phi.size() &&
                   std::equal(phi.begin(), phi.end(), lp->parts().begin());
      if (shape)
        for (std::size_t i = phi.size(); i < lp->size(); ++i) shape = shape && (*lp)[i] == 0;
      if (!shape) bad.push_back(where + "lift is not A^j Phi(p)");
      if (nabla_ideal(lift(ideal)) != ideal) bad.push_back(where + "nabla(Phi(I)) != I");
      for (const auto& g : expandable_generators(ideal)) {
        const auto ep = hilbert_polynomial(expand(ideal, g)).polynomial;
        if (!ep || *ep != apply_A(*p)) bad.push_back(where + "expansion at " + to_human(g));
      }
    }
  return bad;
}

inline bool oracle_feasible(const GotzmannPartition& b, int n) {
  const borelfix::OracleOptions defaults;
  return n <= defaults.max_n && b.gotzmann_number() <= defaults.max_gotzmann_number;
}

// Oracle at characteristic 0 against Reeves on the feasible sweep cells.
inline Violations oracle_matches_reeves(const std::vector<SweepCell>& cells, DegreeBound* bound,
                                        int* compared) {
  Violations bad;
  for (const auto& cell : cells) {
    if (!oracle_feasible(cell.b, cell.n)) continue;
    const auto found = borelfix::enumerate_p_borel(cell.b, cell.n, borelfix::Characteristic(0));
    if (bound) bound->record(cell.b, cell.n, found);
    if (compared) ++*compared;
    if (found != cell.ideals)
      bad.push_back(show(cell.b.parts()) + " n=" + std::to_string(cell.n) + ": oracle " +
                    std::to_string(found.size()) + " vs reeves " + std::to_string(cell.ideals.size()));
  }
  return bad;
}

inline Violations strongly_stable_is_p_borel(const std::vector<SweepCell>& cells) {
  Violations bad;
  for (const auto& cell : cells)
    for (const auto& ideal : cell.ideals)
      for (int p : {2, 3, 5, 7})
        if (!borelfix::is_p_borel(ideal, borelfix::Characteristic(p)))
          bad.push_back(show(cell.b.parts()) + " " + borelfix::to_human(ideal) + " not " +
                        std::to_string(p) + "-Borel");
  return bad;
}

}  // namespace props
