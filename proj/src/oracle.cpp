#include "borelfix/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "borelfix/error.hpp"

namespace borelfix {

namespace {

std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == num_vars - 1) {
      e[static_cast<std::size_t>(index)] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[static_cast<std::size_t>(index)] = v;
      self(self, index + 1, remaining - v);
    }
  };
  if (num_vars > 0) rec(rec, 0, degree);
  return out;  // lex-descending
}

class Search {
 public:
  Search(const GotzmannPartition& b, int n, Characteristic ch, OracleStats* stats)
      : target_(b),
        num_vars_(n + 1),
        r_(b.gotzmann_number()),
        ch_(ch),
        stats_(stats),
        value_at_r_(static_cast<std::int64_t>(evaluate(b, r_))) {}

  IdealSet run() {
    descend(1, MonomialIdeal::zero(num_vars_));
    return std::move(found_);
  }

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;  // lex-descending
    std::map<std::vector<int>, std::size_t> index;
  };

  const DegreeData& degree_data(int t) {
    auto it = degrees_.find(t);
    if (it != degrees_.end()) return it->second;
    DegreeData data;
    data.monomials = monomials_of_degree(num_vars_, t);
    for (std::size_t i = 0; i < data.monomials.size(); ++i)
      data.index.emplace(data.monomials[i].exponents(), i);
    return degrees_.emplace(t, std::move(data)).first->second;
  }

  void descend(int t, const MonomialIdeal& ideal) {
    if (t > r_) {
      finish(ideal);
      return;
    }
    const DegreeData& data = degree_data(t);
    const std::size_t total = data.monomials.size();
    std::vector<char> member(total, 0);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < total; ++i) {
      const Monomial& m = data.monomials[i];
      if (contains(ideal, m)) {
        member[i] = 1;
      } else if (m[static_cast<std::size_t>(num_vars_) - 1] == 0) {
        free.push_back(i);  // minimal generators of a saturated ideal avoid x_n
      }
    }
    // h(t) is nondecreasing for saturated ideals and equals p(r) at t = r.
    const std::int64_t in_ideal = std::count(member.begin(), member.end(), 1);
    const std::int64_t needed = static_cast<std::int64_t>(total) - value_at_r_;
    choose(t, ideal, data, member, free, 0, in_ideal, needed);
  }

  void choose(int t, const MonomialIdeal& ideal, const DegreeData& data, std::vector<char>& member,
              const std::vector<std::size_t>& free, std::size_t pos, std::int64_t size,
              std::int64_t needed) {
    if (size + static_cast<std::int64_t>(free.size() - pos) < needed) {
      if (stats_) ++stats_->pruned;
      return;
    }
    if (pos == free.size()) {
      if (stats_) ++stats_->closed_sets;
      std::vector<Monomial> gens = ideal.generators();
      for (std::size_t i : free)
        if (member[i]) gens.push_back(data.monomials[i]);
      MonomialIdeal next = minimalize(std::move(gens), num_vars_);
      const std::int64_t h_r = hilbert_function(next, r_);
      const bool viable = t == r_ ? h_r == value_at_r_ : h_r >= value_at_r_;
      if (!viable) {
        if (stats_) ++stats_->pruned;
        return;
      }
      descend(t + 1, next);
      return;
    }
    const std::size_t i = free[pos];
    bool closed = true;
    for_each_borel_move(data.monomials[i], ch_, [&](const Monomial& target) {
      closed = closed && member[data.index.at(target.exponents())];
    });
    if (closed) {
      member[i] = 1;
      choose(t, ideal, data, member, free, pos + 1, size + 1, needed);
      member[i] = 0;
    }
    choose(t, ideal, data, member, free, pos + 1, size, needed);
  }

  void finish(const MonomialIdeal& ideal) {
    if (stats_) ++stats_->candidates;
    if (saturate_wrt(ideal, num_vars_ - 1) != ideal) return;
    if (!is_p_borel(ideal, ch_)) fail(ErrorKind::Internal, "oracle produced a non-Borel ideal");
    const HilbertData hd = hilbert_polynomial(ideal, r_);
    if (hd.polynomial && *hd.polynomial == target_) found_.insert(ideal);
  }

  GotzmannPartition target_;
  int num_vars_;
  int r_;
  Characteristic ch_;
  OracleStats* stats_;
  std::int64_t value_at_r_;
  std::map<int, DegreeData> degrees_;
  IdealSet found_;
};

}  // namespace

IdealSet enumerate_p_borel(const GotzmannPartition& b, int n, Characteristic ch,
                           const OracleOptions& options, OracleStats* stats) {
  if (n <= b.degree())
    fail(ErrorKind::InvalidArgument, "ambient dimension n=" + std::to_string(n) +
                                         " must exceed the degree " + std::to_string(b.degree()));
  if (!options.force &&
      (n > options.max_n || b.gotzmann_number() > options.max_gotzmann_number))
    fail(ErrorKind::Feasibility,
         "search bound exceeded: oracle is guarded to n <= " + std::to_string(options.max_n) +
             " and r <= " + std::to_string(options.max_gotzmann_number) + " (use --force)");
  return Search(b, n, ch, stats).run();
}

}  // namespace borelfix
