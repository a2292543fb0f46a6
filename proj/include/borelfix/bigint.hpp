#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace borelfix {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial binomial coefficient C(x, k) = x (x-1) ... (x-k+1) / k!,
/// evaluated at an integer x. Zero when k < 0. Negative x is allowed and
/// follows the polynomial (not the combinatorial) convention.
BigInt binomial(const BigInt& x, std::int64_t k);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace borelfix
