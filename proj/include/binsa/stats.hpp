#pragma once

// Elementary statistics. Every reduction goes through the fixed-order
// kernels in simd/kernels.hpp, so results are bitwise reproducible.

#include <cstdint>
#include <span>
#include <vector>

namespace binsa {

double mean(std::span<const double> x);

/// Population variance (divides by N), matching the weighted variance of
/// bin means.
double variance(std::span<const double> x);

/// Sum_b n_b (m_b - g)^2 / Sum_b n_b. Bins with zero count are skipped.
/// Throws NumericError("empty binning") when every count is zero.
double weighted_variance(std::span<const double> bin_means,
                         std::span<const std::int64_t> bin_counts, double grand_mean);

/// Product-moment correlation. Throws NumericError("degenerate correlation")
/// when either argument has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of mid-ranks (ties share the average rank).
double spearman(std::span<const double> x, std::span<const double> y);

/// 1-based ranks, ties replaced by their average.
std::vector<double> midranks(std::span<const double> x);

}  // namespace binsa
