#pragma once

// The simple binning estimator: first- and second-order sensitivity indices
// from a single given-data sample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "binsa/core.hpp"

namespace binsa {

struct BinningConfig {
  enum class SecondOrderMarginals {
    recompute,          // S_i, S_j in the pair term use the same m bins as the joint grid
    reuse_first_order,  // subtract the published first-order indices
  };

  std::optional<int> n_bins_first;            // auto: bin_count_first(N, K)
  std::optional<int> n_bins_second_per_dim;   // auto: round(sqrt(n_bins_first))
  SecondOrderMarginals marginals = SecondOrderMarginals::recompute;
  unsigned threads = 1;                       // 0 = hardware concurrency
};

/// Interpolated optimal bin count for first-order indices. Bilinear over the
/// tabulated (N, K) grid with N clamped to [1000, 50000] and K to [3, 12],
/// rounded, floored at 10 and capped at 100.
/// Throws InputError("sample too small") for n_obs < 100.
int bin_count_first(std::size_t n_obs, std::size_t k_inputs);

/// round(sqrt(n_bins_first)), at least 2.
int bin_count_second(int n_bins_first);

struct BinEdges {
  bool categorical = false;
  int n_bins = 0;
  double lo = 0.0;     // numeric only
  double width = 0.0;  // numeric only
  std::vector<double> edges;  // numeric: n_bins + 1 values, last one equals the column max
};

/// Equal-width bins over the observed range (rightmost edge inclusive), or one
/// bin per level for a categorical input.
/// Throws InputError("degenerate input") for a constant numeric column.
BinEdges bin_edges(std::span<const double> column, const InputSpec& spec, int n_bins);

/// Bin number of every value, in [0, n_bins).
std::vector<std::int32_t> assign_bins(std::span<const double> column, const BinEdges& edges);

double first_order_index(std::span<const double> x, std::span<const double> y,
                         const InputSpec& spec, int n_bins);

/// Joint m x m term minus both marginal terms recomputed at m bins.
/// Appends "sparse grid" to `warnings` (when given) if m^2 > N/5.
double second_order_index(std::span<const double> xi, std::span<const double> xj,
                          std::span<const double> y, const InputSpec& spec_i,
                          const InputSpec& spec_j, int m,
                          std::vector<std::string>* warnings = nullptr);

/// All first-order, pairwise second-order and combined indices.
SensitivityReport analyze(const Dataset& data, const BinningConfig& config = {});

/// Sum of first-order and upper-triangle second-order indices.
double conservation_check(const SensitivityReport& report);

}  // namespace binsa
