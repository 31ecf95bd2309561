#pragma once

// Canonical row order shared by the estimators: rows sorted by output value
// under a total order on doubles. Accumulating in this order makes results
// independent of the order rows arrive in.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace binsa::detail {

/// Monotone map of a double onto int64 (-0 sorts before +0).
inline std::int64_t order_key(double v) {
  const auto bits = std::bit_cast<std::int64_t>(v);
  return bits < 0 ? bits ^ INT64_MAX : bits;
}

inline std::vector<std::size_t> canonical_order(std::span<const double> y) {
  std::vector<std::int64_t> key(y.size());
  for (std::size_t r = 0; r < y.size(); ++r) key[r] = order_key(y[r]);
  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

}  // namespace binsa::detail
