#include "binsa/binning.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>
#include <tuple>

#include "binsa/simd/kernels.hpp"
#include "binsa/stats.hpp"
#include "canonical.hpp"

namespace binsa {
namespace {

constexpr std::array<double, 7> kGridN = {1000, 2500, 5000, 7500, 10000, 25000, 50000};
constexpr std::array<double, 3> kGridK = {3, 6, 12};
// Rows follow kGridN, columns kGridK.
constexpr double kGridBins[7][3] = {
    {10, 10, 10}, {25, 10, 10}, {50, 10, 10}, {50, 25, 10},
    {50, 50, 10}, {100, 50, 25}, {100, 50, 50},
};

template <std::size_t N>
std::pair<std::size_t, double> locate(const std::array<double, N>& grid, double v) {
  v = std::clamp(v, grid.front(), grid.back());
  std::size_t i = 0;
  while (i + 2 < N && v > grid[i + 1]) ++i;
  return {i, (v - grid[i]) / (grid[i + 1] - grid[i])};
}

// Output in canonical row order, centred, together with its variance.
struct PreparedOutput {
  std::vector<std::size_t> order;
  std::vector<double> yc;
  double var = 0.0;
};

PreparedOutput prepare_output(std::span<const double> y) {
  if (y.size() < 2) throw InputError("need at least two observations");
  PreparedOutput p;
  p.order = detail::canonical_order(y);
  std::vector<double> ys(y.size());
  for (std::size_t r = 0; r < ys.size(); ++r) ys[r] = y[p.order[r]];
  const double mu = mean(ys);
  const double n = static_cast<double>(ys.size());
  const double var = simd::sum_sq_dev(ys, mu) / n;
  const double mean_sq = var + mu * mu;
  if (!(var > 0.0) || var <= 1e-20 * mean_sq) throw NumericError("constant output");
  p.yc.resize(ys.size());
  for (std::size_t r = 0; r < ys.size(); ++r) p.yc[r] = ys[r] - mu;
  p.var = variance(p.yc);
  return p;
}

std::vector<double> gather(std::span<const double> x, std::span<const std::size_t> order) {
  std::vector<double> out(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[r] = x[order[r]];
  return out;
}

// Var_w(E[Y | cell]) / Var(Y). Rows are grouped by cell with a stable
// counting sort, so each cell's values are summed in canonical order.
double binned_ratio(std::span<const std::int32_t> cell, std::size_t n_cells,
                    const PreparedOutput& out) {
  const std::size_t n = cell.size();
  std::vector<std::int64_t> counts(n_cells, 0);
  for (std::int32_t c : cell) ++counts[static_cast<std::size_t>(c)];
  std::vector<std::size_t> start(n_cells + 1, 0);
  for (std::size_t c = 0; c < n_cells; ++c) {
    start[c + 1] = start[c] + static_cast<std::size_t>(counts[c]);
  }
  std::vector<double> grouped(n);
  std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
  for (std::size_t r = 0; r < n; ++r) grouped[cursor[static_cast<std::size_t>(cell[r])]++] = out.yc[r];

  // Non-empty cells sorted by (mean, count): the result then does not depend
  // on how cells are numbered, which makes S_ij and S_ji bitwise equal.
  std::vector<std::pair<double, std::int64_t>> stats;
  for (std::size_t c = 0; c < n_cells; ++c) {
    if (counts[c] == 0) continue;
    const std::span<const double> seg(grouped.data() + start[c], static_cast<std::size_t>(counts[c]));
    stats.emplace_back(simd::sum(seg) / static_cast<double>(counts[c]), counts[c]);
  }
  std::sort(stats.begin(), stats.end(), [](const auto& a, const auto& b) {
    const auto ka = detail::order_key(a.first);
    const auto kb = detail::order_key(b.first);
    return ka != kb ? ka < kb : a.second < b.second;
  });
  std::vector<double> means(stats.size());
  std::vector<std::int64_t> sizes(stats.size());
  for (std::size_t s = 0; s < stats.size(); ++s) std::tie(means[s], sizes[s]) = stats[s];
  const double grand = simd::sum(out.yc) / static_cast<double>(n);
  return weighted_variance(means, sizes, grand) / out.var;
}

std::vector<std::int32_t> joint_cells(std::span<const std::int32_t> a,
                                      std::span<const std::int32_t> b, int stride) {
  std::vector<std::int32_t> cells(a.size());
  simd::cell_index(a, b, stride, cells);
  return cells;
}

bool sparse(std::size_t cells, std::size_t n) { return cells * 5 > n; }

std::string sparse_warning(std::size_t cells, std::size_t n) {
  return "sparse grid: " + std::to_string(cells) + " cells for " + std::to_string(n) +
         " observations (more than N/5)";
}

void parallel_for(std::size_t n_tasks, unsigned threads,
                  const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_tasks));
  if (threads <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) task(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = next++; t < n_tasks; t = next++) task(t);
      } catch (...) {
        errors[w] = std::current_exception();
        next = n_tasks;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int bin_count_first(std::size_t n_obs, std::size_t k_inputs) {
  if (n_obs < 100) throw InputError("sample too small");
  if (k_inputs < 1) throw InputError("bin_count_first: need at least one input");
  const auto [i, tn] = locate(kGridN, static_cast<double>(n_obs));
  const auto [j, tk] = locate(kGridK, static_cast<double>(k_inputs));
  const double v = (1 - tn) * (1 - tk) * kGridBins[i][j] + (1 - tn) * tk * kGridBins[i][j + 1] +
                   tn * (1 - tk) * kGridBins[i + 1][j] + tn * tk * kGridBins[i + 1][j + 1];
  return std::clamp(static_cast<int>(std::lround(v)), 10, 100);
}

int bin_count_second(int n_bins_first) {
  if (n_bins_first < 1) throw InputError("bin count must be positive");
  return std::max(2, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_bins_first)))));
}

BinEdges bin_edges(std::span<const double> column, const InputSpec& spec, int n_bins) {
  if (column.empty()) throw InputError("bin_edges: empty column");
  BinEdges e;
  if (spec.distribution.is_categorical()) {
    e.categorical = true;
    e.n_bins = static_cast<int>(spec.distribution.level_count());
    return e;
  }
  if (n_bins < 2) throw InputError("bin_edges: need at least 2 bins");
  const auto [mn, mx] = std::minmax_element(column.begin(), column.end());
  const double lo = *mn;
  const double hi = *mx;
  const double width = (hi - lo) / n_bins;
  if (!(width > 0.0) || !std::isfinite(width)) throw InputError("degenerate input");
  e.n_bins = n_bins;
  e.lo = lo;
  e.width = width;
  e.edges.resize(static_cast<std::size_t>(n_bins) + 1);
  for (int k = 0; k < n_bins; ++k) e.edges[static_cast<std::size_t>(k)] = lo + k * width;
  e.edges.back() = hi;
  return e;
}

std::vector<std::int32_t> assign_bins(std::span<const double> column, const BinEdges& edges) {
  std::vector<std::int32_t> out(column.size());
  if (edges.categorical) {
    for (std::size_t r = 0; r < column.size(); ++r) {
      const double v = column[r];
      if (!(v >= 0.0 && v < edges.n_bins) || v != std::floor(v)) {
        throw InputError("categorical column holds an invalid level index");
      }
      out[r] = static_cast<std::int32_t>(v);
    }
    return out;
  }
  simd::bin_index(column, edges.lo, edges.width, edges.n_bins - 1, out);
  return out;
}

double first_order_index(std::span<const double> x, std::span<const double> y,
                         const InputSpec& spec, int n_bins) {
  if (x.size() != y.size()) throw InputError("first_order_index: length mismatch");
  const PreparedOutput out = prepare_output(y);
  const std::vector<double> xs = gather(x, out.order);
  const BinEdges e = bin_edges(xs, spec, n_bins);
  return binned_ratio(assign_bins(xs, e), static_cast<std::size_t>(e.n_bins), out);
}

double second_order_index(std::span<const double> xi, std::span<const double> xj,
                          std::span<const double> y, const InputSpec& spec_i,
                          const InputSpec& spec_j, int m, std::vector<std::string>* warnings) {
  if (xi.size() != y.size() || xj.size() != y.size()) {
    throw InputError("second_order_index: length mismatch");
  }
  if (m < 2) throw InputError("second_order_index: need at least 2 bins per dimension");
  const PreparedOutput out = prepare_output(y);
  const std::vector<double> a = gather(xi, out.order);
  const std::vector<double> b = gather(xj, out.order);
  const BinEdges ea = bin_edges(a, spec_i, m);
  const BinEdges eb = bin_edges(b, spec_j, m);
  const std::vector<std::int32_t> ba = assign_bins(a, ea);
  const std::vector<std::int32_t> bb = assign_bins(b, eb);
  const std::size_t cells = static_cast<std::size_t>(ea.n_bins) * static_cast<std::size_t>(eb.n_bins);
  if (warnings && sparse(cells, y.size())) warnings->push_back(sparse_warning(cells, y.size()));
  const double joint = binned_ratio(joint_cells(ba, bb, eb.n_bins), cells, out);
  const double si = binned_ratio(ba, static_cast<std::size_t>(ea.n_bins), out);
  const double sj = binned_ratio(bb, static_cast<std::size_t>(eb.n_bins), out);
  return joint - (si + sj);
}

SensitivityReport analyze(const Dataset& data, const BinningConfig& config) {
  const std::size_t n = data.n_rows();
  const std::size_t k = data.n_inputs();
  if (k == 0) throw InputError("analyze: dataset has no inputs");
  if (config.n_bins_first && *config.n_bins_first < 2) {
    throw InputError("n_bins_first must be at least 2");
  }
  if (config.n_bins_second_per_dim && *config.n_bins_second_per_dim < 2) {
    throw InputError("n_bins_second_per_dim must be at least 2");
  }
  const int nb = config.n_bins_first ? *config.n_bins_first : bin_count_first(n, k);
  const int m = config.n_bins_second_per_dim ? *config.n_bins_second_per_dim : bin_count_second(nb);
  const bool recompute = config.marginals == BinningConfig::SecondOrderMarginals::recompute;

  const PreparedOutput out = prepare_output(data.output());

  SensitivityReport rep{data.names(), std::vector<double>(k, 0.0), SymmetricMatrix(k),
                        std::vector<double>(k, 0.0)};
  rep.var_y = out.var;
  rep.n_bins_first = nb;
  rep.n_bins_second_per_dim = m;

  // Per-column bin numbers at both resolutions, in canonical row order.
  std::vector<std::vector<std::int32_t>> fine(k), coarse(k);
  std::vector<int> fine_n(k, 0), coarse_n(k, 0);
  std::vector<bool> usable(k, true);
  for (std::size_t c = 0; c < k; ++c) {
    const std::vector<double> xs = gather(data.column(c), out.order);
    try {
      const BinEdges ef = bin_edges(xs, data.spec(c), nb);
      const BinEdges ec = bin_edges(xs, data.spec(c), m);
      fine[c] = assign_bins(xs, ef);
      coarse[c] = assign_bins(xs, ec);
      fine_n[c] = ef.n_bins;
      coarse_n[c] = ec.n_bins;
    } catch (const InputError&) {
      usable[c] = false;
      rep.warnings.push_back("input '" + data.spec(c).name +
                             "' is constant; its indices are set to 0");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t max_cells = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!usable[i] || !usable[j]) continue;
      pairs.emplace_back(i, j);
      max_cells = std::max(max_cells, static_cast<std::size_t>(coarse_n[i]) *
                                          static_cast<std::size_t>(coarse_n[j]));
    }
  }
  if (sparse(max_cells, n)) rep.warnings.push_back(sparse_warning(max_cells, n));

  std::vector<double> marginal_m(k, 0.0);
  std::vector<double> joint(pairs.size(), 0.0);
  // Tasks: [0, k) first order, [k, 2k) marginals at m bins, then the pairs.
  parallel_for(2 * k + pairs.size(), config.threads, [&](std::size_t t) {
    if (t < k) {
      if (usable[t]) rep.first_order[t] = binned_ratio(fine[t], static_cast<std::size_t>(fine_n[t]), out);
    } else if (t < 2 * k) {
      const std::size_t c = t - k;
      if (usable[c] && recompute) {
        marginal_m[c] = binned_ratio(coarse[c], static_cast<std::size_t>(coarse_n[c]), out);
      }
    } else {
      const auto [i, j] = pairs[t - 2 * k];
      const std::size_t cells =
          static_cast<std::size_t>(coarse_n[i]) * static_cast<std::size_t>(coarse_n[j]);
      joint[t - 2 * k] = binned_ratio(joint_cells(coarse[i], coarse[j], coarse_n[j]), cells, out);
    }
  });

  const std::vector<double>& marg = recompute ? marginal_m : rep.first_order;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    rep.second_order.set(i, j, joint[p] - (marg[i] + marg[j]));
  }
  for (std::size_t i = 0; i < k; ++i) {
    double half = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) half += rep.second_order(i, j);
    }
    rep.combined[i] = rep.first_order[i] + half / 2.0;
  }
  return rep;
}

double conservation_check(const SensitivityReport& report) {
  double total = 0.0;
  for (double s : report.first_order) total += s;
  for (std::size_t i = 0; i < report.size(); ++i) {
    for (std::size_t j = i + 1; j < report.size(); ++j) total += report.second_order(i, j);
  }
  return total;
}

}  // namespace binsa
