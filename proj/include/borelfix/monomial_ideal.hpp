#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "borelfix/hilbert_poly.hpp"

namespace borelfix {

/// x^u = x_0^{u_0} ... x_n^{u_n}; the ring K[x_0..x_n] is implied by the
/// length of the exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }
  static Monomial variable(int num_vars, int index, int power = 1);

  const std::vector<int>& exponents() const noexcept { return exps_; }
  int num_vars() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Largest / smallest index i with u_i > 0; -1 for the unit monomial.
  int max_index() const noexcept;
  int min_index() const noexcept;

  bool divides(const Monomial& other) const noexcept;

  /// Multiplies by x_index^power (power may be negative as long as the
  /// result stays a monomial).
  Monomial times(int index, int power = 1) const;

  /// Canonical order: degree first, then lexicographic with x_0 > x_1 > ...
  /// (lex-larger monomials sort first within a degree).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// True when x^a is lexicographically larger than x^b (first nonzero entry of
/// a - b is positive).
bool lex_greater(const Monomial& a, const Monomial& b);

/// A monomial ideal stored by its minimal generators in canonical order.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int num_vars) : num_vars_(num_vars) {}

  static MonomialIdeal zero(int num_vars) { return MonomialIdeal(num_vars); }
  static MonomialIdeal unit(int num_vars);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  int max_generator_degree() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, int num_vars);

  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops generators divisible by other generators and sorts canonically.
/// Throws Error(InvalidArgument) on a length mismatch.
MonomialIdeal minimalize(std::vector<Monomial> gens, int num_vars);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// h_{S/I}(degree): the number of degree-`degree` monomials outside I.
std::int64_t hilbert_function(const MonomialIdeal& ideal, int degree);

/// h_{S/I}(0), ..., h_{S/I}(max_degree) in one pass.
std::vector<std::int64_t> hilbert_function_values(const MonomialIdeal& ideal, int max_degree);

struct HilbertData {
  MonomialIdeal ideal;
  std::map<int, std::int64_t> function_values;
  /// nullopt encodes the zero polynomial (unit ideal, or finite length).
  std::optional<GotzmannPartition> polynomial;
  /// Least degree from which the recorded function values agree with the
  /// polynomial.
  int stabilization_degree = 0;
  /// Number of times the sampling window had to be moved up; nonzero values
  /// mean the default regularity guess was too small.
  int window_retries = 0;
};

/// Samples the Hilbert function on a window starting at
/// D = max(reg_hint, max generator degree + num_vars), peels the Gotzmann
/// partition, and confirms it on three further degrees. A failed window is
/// retried at 2D, up to three times, before Error(Domain, "unstable window").
HilbertData hilbert_polynomial(const MonomialIdeal& ideal,
                               std::optional<int> reg_hint = std::nullopt);

/// (I : x_k^infinity).
MonomialIdeal saturate_wrt(const MonomialIdeal& ideal, int k);

/// I . S[x_{n+1}]: the same generators in one more variable.
MonomialIdeal lift(const MonomialIdeal& ideal);

/// Image under x_{n-1}, x_n -> 1 in K[x_0..x_{n-1}].
MonomialIdeal nabla_ideal(const MonomialIdeal& ideal);

}  // namespace borelfix
