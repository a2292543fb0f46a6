#include "borelfix/bigint.hpp"

namespace borelfix {

BigInt binomial(const BigInt& x, std::int64_t k) {
  if (k < 0) return 0;
  // C(x, i+1) = C(x, i) (x - i) / (i + 1); every prefix is integer valued,
  // so each division is exact.
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= (x - i);
    result /= (i + 1);
  }
  return result;
}

}  // namespace borelfix
