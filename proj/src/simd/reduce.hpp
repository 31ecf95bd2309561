#pragma once

// Shared split rule of the blocked pairwise reductions. Each ISA supplies
// only the leaf; the recursion is common so that every variant adds the
// same partial sums in the same order.

#include <cstddef>

#include "binsa/simd/kernels.hpp"

namespace binsa::simd::detail {

inline std::size_t split_point(std::size_t n) { return (n / 2) & ~std::size_t{3}; }

template <class Leaf>
double pairwise_sum(const double* x, std::size_t n, const Leaf& leaf) {
  if (n <= kLeafSize) return leaf(x, n);
  const std::size_t h = split_point(n);
  return pairwise_sum(x, h, leaf) + pairwise_sum(x + h, n - h, leaf);
}

template <class Leaf>
CrossMoments pairwise_moments(const double* x, const double* y, std::size_t n, const Leaf& leaf) {
  if (n <= kLeafSize) return leaf(x, y, n);
  const std::size_t h = split_point(n);
  const CrossMoments a = pairwise_moments(x, y, h, leaf);
  const CrossMoments b = pairwise_moments(x + h, y + h, n - h, leaf);
  return {a.xx + b.xx, a.yy + b.yy, a.xy + b.xy};
}

}  // namespace binsa::simd::detail
