#include "borelfix/hilbert_poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "borelfix/error.hpp"

namespace borelfix {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

}  // namespace

GotzmannPartition::GotzmannPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorKind::InvalidArgument, "Gotzmann partition must be nonempty");
  if (parts_.back() < 0)
    fail(ErrorKind::InvalidArgument, "Gotzmann partition has a negative part: " + join(parts_));
  if (!weakly_decreasing(parts_))
    fail(ErrorKind::InvalidArgument,
         "Gotzmann partition must be weakly decreasing: " + join(parts_));
}

MacaulayPartition::MacaulayPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorKind::InvalidArgument, "Macaulay partition must be nonempty");
  if (parts_.back() <= 0)
    fail(ErrorKind::InvalidArgument, "Macaulay partition parts must be positive: " + join(parts_));
  if (!weakly_decreasing(parts_))
    fail(ErrorKind::InvalidArgument,
         "Macaulay partition must be weakly decreasing: " + join(parts_));
}

BigInt evaluate(const GotzmannPartition& b, std::int64_t t) {
  BigInt sum = 0;
  const auto& parts = b.parts();
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const std::int64_t j = static_cast<std::int64_t>(idx) + 1;
    const int bj = parts[idx];
    sum += binomial(BigInt(t + bj - j + 1), bj);
  }
  return sum;
}

MacaulayPartition to_macaulay(const GotzmannPartition& b) {
  std::vector<int> e;
  e.push_back(b.gotzmann_number());
  for (int i = 1; i <= b.degree(); ++i) {
    const auto count = std::count_if(b.parts().begin(), b.parts().end(),
                                     [i](int part) { return part >= i; });
    e.push_back(static_cast<int>(count));
  }
  return MacaulayPartition(std::move(e));
}

GotzmannPartition from_macaulay(const MacaulayPartition& e) {
  const auto& parts = e.parts();
  const int d = e.degree();
  std::vector<int> b;
  b.reserve(static_cast<std::size_t>(parts.front()));
  // e_i - e_{i+1} parts equal to i, largest first; e_{d+1} = 0.
  for (int i = d; i >= 0; --i) {
    const int next = i == d ? 0 : parts[static_cast<std::size_t>(i) + 1];
    b.insert(b.end(), static_cast<std::size_t>(parts[static_cast<std::size_t>(i)] - next), i);
  }
  return GotzmannPartition(std::move(b));
}

GotzmannPartition apply_A(const GotzmannPartition& b) {
  auto parts = b.parts();
  parts.push_back(0);
  return GotzmannPartition(std::move(parts));
}

GotzmannPartition apply_Phi(const GotzmannPartition& b) {
  auto parts = b.parts();
  for (int& part : parts) ++part;
  return GotzmannPartition(std::move(parts));
}

GotzmannPartition apply_nabla(const GotzmannPartition& b) {
  if (b.degree() == 0)
    fail(ErrorKind::Domain, "nabla of a constant is the zero polynomial");
  std::vector<int> parts;
  for (int part : b.parts())
    if (part > 0) parts.push_back(part - 1);
  return GotzmannPartition(std::move(parts));
}

std::optional<int> finite_difference_degree(std::span<const BigInt> values) {
  std::vector<BigInt> row(values.begin(), values.end());
  for (int order = 0; !row.empty(); ++order) {
    if (std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; }))
      return order - 1;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return std::nullopt;
}

SampledPolynomial sample(const GotzmannPartition& b, std::int64_t base, int width) {
  SampledPolynomial s{base, {}};
  s.values.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) s.values.push_back(evaluate(b, base + i));
  return s;
}

GotzmannPartition peel_to_partition(const SampledPolynomial& s, const PeelOptions& options) {
  std::vector<BigInt> rest = s.values;
  if (rest.size() < 2) fail(ErrorKind::Domain, "not admissible: window shorter than two samples");

  auto degree = finite_difference_degree(rest);
  if (!degree) fail(ErrorKind::Domain, "not admissible: samples do not determine a polynomial");
  if (*degree < 0) fail(ErrorKind::Domain, "not admissible: zero polynomial");
  if (rest.back() < 0) fail(ErrorKind::Domain, "not admissible: negative value at window top");

  BigInt cap = options.max_terms > 0 ? BigInt(options.max_terms) : rest.back() + *degree + 2;

  std::vector<int> parts;
  int previous = std::numeric_limits<int>::max();
  while (*degree >= 0) {
    if (BigInt(parts.size()) >= cap)
      fail(ErrorKind::Domain, "not admissible: peel exceeded " + cap.str() + " terms");
    if (*degree > previous)
      fail(ErrorKind::Domain, "not admissible: peeled parts are not weakly decreasing");
    const std::int64_t j = static_cast<std::int64_t>(parts.size()) + 1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const std::int64_t t = s.base_degree + static_cast<std::int64_t>(i);
      rest[i] -= binomial(BigInt(t + *degree - j + 1), *degree);
    }
    parts.push_back(*degree);
    previous = *degree;
    if (rest.back() < 0)
      fail(ErrorKind::Domain, "not admissible: peel step negative at window top");
    degree = finite_difference_degree(rest);
    if (!degree) fail(ErrorKind::Domain, "not admissible: remainder is not polynomial on window");
  }
  return GotzmannPartition(std::move(parts));
}

}  // namespace borelfix
