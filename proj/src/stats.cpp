#include "binsa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "binsa/core.hpp"
#include "binsa/simd/kernels.hpp"

namespace binsa {

double mean(std::span<const double> x) {
  if (x.empty()) throw InputError("mean of an empty vector");
  return simd::sum(x) / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  const double m = mean(x);
  return simd::sum_sq_dev(x, m) / static_cast<double>(x.size());
}

double weighted_variance(std::span<const double> bin_means,
                         std::span<const std::int64_t> bin_counts, double grand_mean) {
  if (bin_means.size() != bin_counts.size() || bin_means.empty()) {
    throw InputError("weighted_variance: means and counts must have equal, non-zero length");
  }
  std::vector<double> terms;
  terms.reserve(bin_means.size());
  std::int64_t total = 0;
  for (std::size_t b = 0; b < bin_means.size(); ++b) {
    const std::int64_t n = bin_counts[b];
    if (n < 0) throw InputError("weighted_variance: negative bin count");
    if (n == 0) continue;
    const double d = bin_means[b] - grand_mean;
    terms.push_back(static_cast<double>(n) * (d * d));
    total += n;
  }
  if (total == 0) throw NumericError("empty binning");
  return simd::sum(terms) / static_cast<double>(total);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("pearson: length mismatch");
  if (x.size() < 2) throw InputError("pearson: need at least two observations");
  const simd::CrossMoments m = simd::cross_moments(x, y, mean(x), mean(y));
  if (!(m.xx > 0.0) || !(m.yy > 0.0)) throw NumericError("degenerate correlation");
  const double r = m.xy / (std::sqrt(m.xx) * std::sqrt(m.yy));
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> midranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    // positions i..j-1 share ranks i+1..j
    const double r = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) rank[order[k]] = r;
    i = j;
  }
  return rank;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("spearman: length mismatch");
  const std::vector<double> rx = midranks(x);
  const std::vector<double> ry = midranks(y);
  return pearson(rx, ry);
}

}  // namespace binsa
