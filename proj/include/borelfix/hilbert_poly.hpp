#pragma once

// Exact calculus of admissible Hilbert polynomials.
//
// A nonzero admissible Hilbert polynomial p is stored through its Gotzmann
// partition b_1 >= ... >= b_r >= 0, for which
//
//   p(t) = sum_{j=1}^{r} C(t + b_j - j + 1, b_j).
//
// The conjugate description (e_0 >= e_1 >= ... >= e_d > 0) is the Macaulay
// partition, with e_0 = r and (e_1, ..., e_d) conjugate to (b_1, ..., b_r).
// No rational arithmetic is used anywhere: polynomials are either partitions
// or integer samples on a window.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "borelfix/bigint.hpp"

namespace borelfix {

class GotzmannPartition {
 public:
  /// Throws Error(InvalidArgument) unless nonempty, nonnegative and weakly
  /// decreasing.
  explicit GotzmannPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const noexcept { return parts_.front(); }
  int gotzmann_number() const noexcept { return static_cast<int>(parts_.size()); }
  int last() const noexcept { return parts_.back(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t size() const noexcept { return parts_.size(); }

  friend bool operator==(const GotzmannPartition&, const GotzmannPartition&) = default;
  friend auto operator<=>(const GotzmannPartition&, const GotzmannPartition&) = default;

 private:
  std::vector<int> parts_;
};

class MacaulayPartition {
 public:
  /// Throws Error(InvalidArgument) unless nonempty, positive and weakly
  /// decreasing.
  explicit MacaulayPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const noexcept { return static_cast<int>(parts_.size()) - 1; }

  friend bool operator==(const MacaulayPartition&, const MacaulayPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Integer samples p(T), p(T+1), ..., p(T+w-1) of a polynomial.
struct SampledPolynomial {
  std::int64_t base_degree = 0;
  std::vector<BigInt> values;
};

BigInt evaluate(const GotzmannPartition& b, std::int64_t t);

MacaulayPartition to_macaulay(const GotzmannPartition& b);
GotzmannPartition from_macaulay(const MacaulayPartition& e);

/// p -> 1 + p: appends a zero part.
GotzmannPartition apply_A(const GotzmannPartition& b);
/// Lifting: increments every part, so that nabla(Phi(p)) = p.
GotzmannPartition apply_Phi(const GotzmannPartition& b);
/// p(t) - p(t-1). Throws Error(Domain) for constants, whose difference is
/// the zero polynomial.
GotzmannPartition apply_nabla(const GotzmannPartition& b);

/// Degree of the polynomial interpolating the samples, read off from the
/// first identically vanishing row of finite differences. Returns -1 for the
/// zero polynomial and nullopt when no row of differences vanishes inside
/// the window.
std::optional<int> finite_difference_degree(std::span<const BigInt> values);

/// Samples evaluate(b, .) on [base, base + width).
SampledPolynomial sample(const GotzmannPartition& b, std::int64_t base, int width);

struct PeelOptions {
  /// Maximum number of peeled terms; 0 selects the default
  /// p(window top) + degree + 2.
  std::int64_t max_terms = 0;
};

/// Recovers the Gotzmann partition from polynomial samples by greedily
/// subtracting C(t + b_j - j + 1, b_j) with b_j the degree of what remains.
/// Throws Error(Domain, "not admissible ...") when the samples are not those
/// of a nonzero admissible polynomial.
GotzmannPartition peel_to_partition(const SampledPolynomial& s,
                                    const PeelOptions& options = {});

}  // namespace borelfix
