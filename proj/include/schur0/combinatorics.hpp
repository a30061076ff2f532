#pragma once

#include <cstdint>
#include <stdexcept>

namespace schur0 {

/// Binomial coefficient with the generalized conventions C(m,0) = 1 and
/// C(m,k) = 0 for k < 0; negative m uses C(m,k) = (-1)^k C(k-m-1,k).
constexpr std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (m < 0) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    return sign * binomial(k - m - 1, k);
  }
  if (k > m) return 0;
  if (k > m - k) k = m - k;
  __int128 result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result = result * (m - k + j) / j;
    if (result > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::int64_t>(result);
}

constexpr std::int64_t factorial(int r) {
  std::int64_t f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return f;
}

constexpr std::int64_t catalan(int r) { return binomial(2 * r, r) / (r + 1); }

}  // namespace schur0
