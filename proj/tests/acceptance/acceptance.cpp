// Acceptance criteria. Each criterion prints one PASS/FAIL line; the exit code
// is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binsa/benchmarks.hpp"
#include "binsa/binning.hpp"
#include "binsa/io/config.hpp"
#include "binsa/sampling.hpp"
#include "binsa/simdec.hpp"
#include "binsa/sobol_oracle.hpp"
#include "binsa/stats.hpp"

using namespace binsa;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects individual checks and keeps the first failing one for the summary.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++n_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  void within(double value, double target, double tol, const std::string& what) {
    expect(std::abs(value - target) <= tol, what + "=" + fmt(value) + " (want " + fmt(target) + " ± " + fmt(tol) + ")");
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failed_) + "/" + std::to_string(n_) +
                       " checks failed, first: " + first_failure_};
  }
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
  }

 private:
  int n_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Dataset sample(const ModelId& m, const std::vector<InputSpec>& specs, SamplingMethod method, std::size_t n,
               std::uint64_t seed, std::span<const DependencePlan> deps = {}) {
  return sample_model(m, specs, SamplingPlan{method, n, seed}, deps);
}

double quantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double iqr(const std::vector<double>& v) { return quantile(v, 0.75) - quantile(v, 0.25); }

// Toy inputs: P_s, C_s, P_t, C_t, P_j, C_j.
constexpr std::size_t kPs = 0, kCs = 1, kPt = 2, kCt = 3, kPj = 4, kCj = 5;

struct ToyAverage {
  std::vector<double> first;
  double ps_cs = 0, pt_ct = 0, pj_cj = 0, total = 0;
  double slowest = 0;
};

ToyAverage toy_average() {
  const ModelId toy = ModelId::toy_portfolio();
  const auto specs = toy_default_specs();
  ToyAverage a;
  a.first.assign(6, 0.0);
  constexpr int kSeeds = 25;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    const auto t0 = Clock::now();
    const SensitivityReport r = analyze(sample(toy, specs, SamplingMethod::qmc, 1000, seed));
    a.slowest = std::max(a.slowest, seconds_since(t0));
    for (std::size_t i = 0; i < 6; ++i) a.first[i] += r.first_order[i] / kSeeds;
    a.ps_cs += r.second_order(kPs, kCs) / kSeeds;
    a.pt_ct += r.second_order(kPt, kCt) / kSeeds;
    a.pj_cj += r.second_order(kPj, kCj) / kSeeds;
    a.total += conservation_check(r) / kSeeds;
  }
  return a;
}

Outcome criterion_1() {
  const ToyAverage a = toy_average();
  Checks c;
  c.within(a.first[kPs], 0.35, 0.03, "S_Ps");
  c.within(a.first[kPt], 0.20, 0.03, "S_Pt");
  c.within(a.first[kPj], 0.08, 0.02, "S_Pj");
  c.within(a.ps_cs, 0.16, 0.03, "S_PsCs");
  c.within(a.pt_ct, 0.10, 0.03, "S_PtCt");
  c.within(a.pj_cj, 0.06, 0.02, "S_PjCj");
  c.within(a.total, 0.99, 0.03, "sum");
  c.expect(a.slowest < 1.0, "runtime " + Checks::fmt(a.slowest) + " s");
  return c.outcome("toy QMC n=1000 x25 seeds: Ps=" + Checks::fmt(a.first[kPs]) + " Pt=" + Checks::fmt(a.first[kPt]) +
                   " Pj=" + Checks::fmt(a.first[kPj]) + " PsCs=" + Checks::fmt(a.ps_cs) + " PtCt=" +
                   Checks::fmt(a.pt_ct) + " PjCj=" + Checks::fmt(a.pj_cj) + " sum=" + Checks::fmt(a.total) +
                   " slowest run " + Checks::fmt(a.slowest) + " s");
}

Outcome criterion_2() {
  const auto specs = toy_default_specs();
  const SensitivityReport bin = analyze(sample(ModelId::toy_portfolio(), specs, SamplingMethod::qmc, 1000, 1));
  const SobolEstimate orc = estimate_sobol(ModelId::toy_portfolio(), specs, 1500, 1, OracleSampler::qmc);
  Checks c;
  c.expect(orc.evaluations == 21000, "oracle evaluations " + std::to_string(orc.evaluations));
  double worst = 0;
  auto match = [&](double b, double o, const std::string& name) {
    worst = std::max(worst, std::abs(b - o));
    c.expect(std::abs(b - o) <= 0.05, "|delta " + name + "|=" + Checks::fmt(std::abs(b - o)) + " (binning " +
                                          Checks::fmt(b) + ", oracle " + Checks::fmt(o) + ")");
  };
  for (std::size_t i = 0; i < 6; ++i) match(bin.first_order[i], orc.first_order[i], "S_" + bin.names[i]);
  for (auto [i, j] : {std::pair{kPs, kCs}, {kPt, kCt}, {kPj, kCj}}) {
    match(bin.second_order(i, j), orc.second_order(i, j), "S_" + bin.names[i] + bin.names[j]);
  }
  return c.outcome("toy binning n=1000 vs pick-freeze 21000 evaluations: max |delta|=" + Checks::fmt(worst) +
                   " (tolerance 0.05)");
}

Outcome criterion_3() {
  const ModelId toy = ModelId::toy_portfolio();
  const auto specs = toy_default_specs(ToyLaw::uniform);
  constexpr int kReps = 100;
  std::vector<std::vector<double>> mc(6), qmc(6);
  std::vector<double> ffd_first;
  bool ffd_repeatable = true;
  for (int rep = 0; rep < kReps; ++rep) {
    const auto seed = static_cast<std::uint64_t>(1000 + rep);
    const SensitivityReport a = analyze(sample(toy, specs, SamplingMethod::mc, 1000, seed));
    const SensitivityReport b = analyze(sample(toy, specs, SamplingMethod::qmc, 1000, seed));
    const SensitivityReport f = analyze(sample(toy, specs, SamplingMethod::ffd, 1000, seed));
    for (std::size_t i = 0; i < 6; ++i) {
      mc[i].push_back(a.first_order[i]);
      qmc[i].push_back(b.first_order[i]);
    }
    if (rep == 0) ffd_first = f.first_order;
    ffd_repeatable = ffd_repeatable && f.first_order == ffd_first;
  }
  Checks c;
  std::string ratios;
  for (std::size_t i = 0; i < 6; ++i) {
    const double q = iqr(qmc[i]);
    const double m = iqr(mc[i]);
    c.expect(q <= m, "IQR " + specs[i].name + " qmc " + Checks::fmt(q) + " > mc " + Checks::fmt(m));
    ratios += " " + specs[i].name + "=" + Checks::fmt(q) + "/" + Checks::fmt(m);
  }
  c.expect(ffd_repeatable, "ffd estimates differ between repetitions");
  return c.outcome("toy uniform n=1000 x100: IQR qmc/mc" + ratios + "; ffd " +
                   (ffd_repeatable ? "repeatable" : "NOT repeatable"));
}

Outcome criterion_4() {
  const ModelId m = ModelId::ishigami();
  const auto t0 = Clock::now();
  const SensitivityReport r = analyze(sample(m, default_specs(m), SamplingMethod::qmc, 10000, 1));
  const double secs = seconds_since(t0);
  Checks c;
  c.within(r.first_order[0], 0.3139, 0.03, "S1");
  c.within(r.first_order[1], 0.4424, 0.03, "S2");
  c.expect(r.first_order[2] <= 0.02, "S3=" + Checks::fmt(r.first_order[2]) + " (want <= 0.02)");
  const double s13 = r.second_order(0, 2);
  c.expect(s13 >= 0.10 && s13 <= 0.25, "S13=" + Checks::fmt(s13) + " (want in [0.10, 0.25])");
  c.expect(secs < 2.0, "runtime " + Checks::fmt(secs) + " s");
  return c.outcome("ishigami QMC n=1e4: S1=" + Checks::fmt(r.first_order[0]) + " S2=" + Checks::fmt(r.first_order[1]) +
                   " S3=" + Checks::fmt(r.first_order[2]) + " S13=" + Checks::fmt(s13) + " (analytic 0.2437) in " +
                   Checks::fmt(secs) + " s");
}

struct SweepRow {
  ModelKind model;
  DependenceKind kind;
  double parameter = 0;
  double pearson = NAN;
  bool degenerate = false;
  SensitivityReport report;
};

std::vector<SweepRow> run_sweep(std::size_t n, const std::vector<DependenceKind>& kinds) {
  std::vector<SweepRow> rows;
  const io::SweepSettings defaults;
  for (const ModelId& model : defaults.models) {
    const auto specs = default_specs(model);
    for (DependenceKind kind : kinds) {
      for (double g : defaults.grid) {
        const DependencePlan plan = kind == DependenceKind::copula
                                        ? DependencePlan::copula(0, 1, g)
                                        : DependencePlan::equal_portion(0, 1, std::abs(g), g < 0);
        const Dataset d = sample(model, specs, SamplingMethod::qmc, n, 0, std::span(&plan, 1));
        SweepRow row{model.kind, kind, g};
        try {
          row.pearson = pearson(d.column(0), d.column(1));
        } catch (const NumericError&) {
        }
        try {
          row.report = analyze(d);
        } catch (const NumericError&) {
          row.degenerate = true;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Outcome criterion_5() {
  const auto t0 = Clock::now();
  const auto rows = run_sweep(100000, {DependenceKind::copula, DependenceKind::equal_portion});
  const double secs = seconds_since(t0);
  Checks c;
  double worst_add = 0, worst_sum = 0;
  const SweepRow* mul_indep = nullptr;
  const SweepRow* mul_073 = nullptr;
  for (const SweepRow& r : rows) {
    if (r.kind != DependenceKind::copula) continue;
    const std::string where = std::string(r.model == ModelKind::two_factor_additive ? "additive" : "multiplicative") +
                              " rho=" + Checks::fmt(r.parameter);
    if (r.model == ModelKind::two_factor_additive && r.parameter == -1.0) {
      c.expect(r.degenerate, where + " not reported degenerate");
      continue;
    }
    if (r.degenerate) {
      c.expect(false, where + " unexpectedly degenerate");
      continue;
    }
    const double sab = r.report.second_order(0, 1);
    const double sum = conservation_check(r.report);
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    c.within(sum, 1.0, 0.02, where + " sum");
    if (r.model == ModelKind::two_factor_additive) {
      worst_add = std::max(worst_add, std::abs(sab + r.pearson));
      c.within(sab, -r.pearson, 0.03, where + " S_AB");
      if (r.parameter == 0.0) c.within(sab, 0.0, 0.01, where + " S_AB");
    } else {
      if (r.parameter == 0.0) mul_indep = &r;
      if (!mul_073 || std::abs(r.pearson - 0.73) < std::abs(mul_073->pearson - 0.73)) mul_073 = &r;
    }
  }
  c.expect(mul_indep != nullptr, "multiplicative independence point missing");
  c.expect(mul_073 != nullptr && std::abs(mul_073->pearson - 0.73) < 0.02, "no grid point with pearson near 0.73");
  double s_indep = NAN, s_073 = NAN;
  if (mul_indep) {
    s_indep = mul_indep->report.second_order(0, 1);
    c.within(s_indep, 0.14, 0.02, "multiplicative S_AB at independence");
  }
  if (mul_073) {
    s_073 = mul_073->report.second_order(0, 1);
    c.within(s_073, -0.70, 0.04, "multiplicative S_AB at pearson " + Checks::fmt(mul_073->pearson));
  }
  c.expect(secs < 30.0, "runtime " + Checks::fmt(secs) + " s");
  return c.outcome("copula sweep N=1e5: additive max |S_AB + pearson|=" + Checks::fmt(worst_add) +
                   ", multiplicative S_AB=" + Checks::fmt(s_indep) + " at 0 and " + Checks::fmt(s_073) +
                   " at pearson 0.73, max |sum-1|=" + Checks::fmt(worst_sum) + "; full sweep " + Checks::fmt(secs) +
                   " s");
}

Outcome criterion_6() {
  Checks c;
  std::size_t reports = 0;
  double lo = 0, hi = 0, lo1 = 0, hi1 = 0;
  auto inspect = [&](const SensitivityReport& r, const std::string& where) {
    ++reports;
    for (std::size_t i = 0; i < r.size(); ++i) {
      lo1 = std::min(lo1, r.first_order[i]);
      hi1 = std::max(hi1, r.first_order[i]);
      c.expect(r.first_order[i] >= -0.02 && r.first_order[i] <= 1.02,
               where + " first-order " + Checks::fmt(r.first_order[i]));
      c.expect(r.combined[i] >= -1.02 && r.combined[i] <= 1.02, where + " combined " + Checks::fmt(r.combined[i]));
      lo = std::min(lo, r.combined[i]);
      hi = std::max(hi, r.combined[i]);
      for (std::size_t j = 0; j < r.size(); ++j) {
        const double v = r.second_order(i, j);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        c.expect(v >= -1.02 && v <= 1.02, where + " second-order " + Checks::fmt(v));
        c.expect(v == r.second_order(j, i), where + " asymmetric second-order matrix");
      }
    }
  };
  std::vector<std::pair<ModelId, std::vector<InputSpec>>> models = {
      {ModelId::toy_portfolio(), toy_default_specs(ToyLaw::normal)},
      {ModelId::toy_portfolio(), toy_default_specs(ToyLaw::uniform)},
      {ModelId::ishigami(), default_specs(ModelId::ishigami())},
      {ModelId::additive(), default_specs(ModelId::additive())},
      {ModelId::multiplicative(), default_specs(ModelId::multiplicative())},
      {ModelId::nested_interaction(), default_specs(ModelId::nested_interaction())}};
  for (const auto& [m, specs] : models) {
    for (SamplingMethod s : {SamplingMethod::mc, SamplingMethod::qmc, SamplingMethod::ffd}) {
      for (std::size_t n : {1000u, 10000u}) {
        inspect(analyze(sample(m, specs, s, n, 5)),
                model_name(m) + "/" + std::string(to_string(s)) + "/" + std::to_string(n));
      }
    }
  }
  for (const SweepRow& r : run_sweep(10000, {DependenceKind::copula, DependenceKind::equal_portion})) {
    if (!r.degenerate) inspect(r.report, "dependence " + Checks::fmt(r.parameter));
  }
  return c.outcome(std::to_string(reports) + " reports: indices in [" + Checks::fmt(lo) + ", " + Checks::fmt(hi) +
                   "], first-order in [" + Checks::fmt(lo1) + ", " + Checks::fmt(hi1) + "], symmetric");
}

Outcome criterion_7() {
  Checks c;
  double worst = 0;
  for (const ModelId& m : {ModelId::toy_portfolio(), ModelId::ishigami(), ModelId::multiplicative(),
                           ModelId::nested_interaction()}) {
    const Dataset d = sample(m, default_specs(m), SamplingMethod::qmc, 10000, 42);
    const SensitivityReport base = analyze(d);
    std::vector<double> y(d.output().begin(), d.output().end());
    for (double& v : y) v = 3.7 * v - 12.0;
    const SensitivityReport aff = analyze(d.with_output(std::move(y)));
    for (std::size_t i = 0; i < base.size(); ++i) {
      worst = std::max({worst, std::abs(aff.first_order[i] - base.first_order[i]),
                        std::abs(aff.combined[i] - base.combined[i])});
      for (std::size_t j = 0; j < base.size(); ++j) {
        worst = std::max(worst, std::abs(aff.second_order(i, j) - base.second_order(i, j)));
      }
    }
    std::vector<std::size_t> order(d.n_rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), std::mt19937_64(9));
    c.expect(analyze(d.permuted(order)) == base, model_name(m) + ": row permutation changed the report");
    for (unsigned t : {2u, 4u, 7u, 0u}) {
      BinningConfig cfg;
      cfg.threads = t;
      c.expect(analyze(d, cfg) == base, model_name(m) + ": " + std::to_string(t) + " threads changed the report");
    }
  }
  c.expect(worst <= 1e-12, "affine transform moved an index by " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return c.outcome(std::string("affine max change ") + buf + "; permutation and 1/2/4/7/all threads bitwise identical");
}

Outcome criterion_8() {
  Checks c;
  const Matrix p = sobol_points(kMaxSobolDim, 4, false, 0);
  for (std::size_t d = 0; d < kMaxSobolDim; ++d) c.expect(p(0, d) == 0.0, "first point not the origin");
  const std::vector<double> first4 = {p(0, 0), p(1, 0), p(2, 0), p(3, 0)};
  c.expect(first4 == std::vector<double>{0.0, 0.5, 0.75, 0.25}, "first four points of dimension 1");
  return c.outcome("unscrambled Sobol': origin first, dimension 1 starts " + Checks::fmt(first4[0]) + ", " +
                   Checks::fmt(first4[1]) + ", " + Checks::fmt(first4[2]) + ", " + Checks::fmt(first4[3]));
}

void check_partition(Checks& c, const Dataset& d, const Decomposition& dec, const std::string& where) {
  c.expect(dec.probability_total() == 1.0, where + ": probabilities sum to " + std::to_string(dec.probability_total()));
  std::vector<std::int64_t> plain(dec.histogram.edges.size() - 1, 0);
  const double lo = dec.histogram.edges.front();
  const double width = (dec.histogram.edges.back() - lo) / static_cast<double>(plain.size());
  for (double y : d.output()) {
    ++plain[std::min(plain.size() - 1, static_cast<std::size_t>((y - lo) / width))];
  }
  c.expect(dec.histogram.total() == plain, where + ": stacked histogram differs from the plain histogram");
  for (const Scenario& s : dec.scenarios) {
    if (s.count == 0) {
      c.expect(s.probability == 0.0 && !s.stats, where + ": empty scenario with statistics");
    } else {
      c.expect(s.stats && s.stats->min <= s.stats->mean && s.stats->mean <= s.stats->max, where + ": min/mean/max");
    }
  }
}

Outcome criterion_9() {
  Checks c;
  const ModelId nested = ModelId::nested_interaction();
  const Dataset d = sample(nested, default_specs(nested), SamplingMethod::qmc, 10000, 3);
  const auto selected = select_inputs(analyze(d));
  const Decomposition dec = decompose(d, default_states(d, selected));
  c.expect(dec.scenarios.size() == 12, "nested: " + std::to_string(dec.scenarios.size()) + " scenarios");
  check_partition(c, d, dec, "nested");

  // Set-up in the style of a published decomposition table, with a structural
  // constraint: t follows load, so (low load, high t) cannot occur.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<InputSpec> specs = {{"load", MarginalDistribution::uniform(-400, 950)},
                                        {"k", MarginalDistribution::uniform(0, 1)},
                                        {"t", MarginalDistribution::uniform(0, 1)}};
  const std::size_t n = 10000;
  std::vector<double> load(n), k(n), t(n), y(n);
  for (std::size_t r = 0; r < n; ++r) {
    load[r] = r == 0 ? -400 : r == 1 ? 950 : -400 + 1350 * u(rng);
    k[r] = u(rng);
    t[r] = std::clamp((load[r] + 400) / 1350 + 0.1 * (u(rng) - 0.5), 0.0, 1.0);
    y[r] = load[r] * (1 + k[r]) - 200 * t[r];
  }
  const Dataset table(specs, {load, k, t}, y);
  const auto dir = std::filesystem::temp_directory_path() / ("binsa_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = (dir / "states.json").string();
  std::ofstream(path) << R"({"states": [
  {"input": "load", "states": [{"label": "Low", "min": -400, "max": 100},
                               {"label": "Medium", "min": 100, "max": 650},
                               {"label": "High", "min": 650, "max": 950}]},
  {"input": "t", "states": [{"label": "Low", "min": 0, "max": 0.5}, {"label": "High", "min": 0.5, "max": 1}]},
  {"input": "k", "states": [{"label": "Low", "min": 0, "max": 0.5}, {"label": "High", "min": 0.5, "max": 1}]}
]})";
  const Decomposition tdec = decompose(table, io::load_states(path, table));
  std::filesystem::remove_all(dir);
  c.expect(tdec.scenarios.size() == 12, "states file: " + std::to_string(tdec.scenarios.size()) + " scenarios");
  check_partition(c, table, tdec, "states file");
  std::size_t empty = 0;
  for (const Scenario& s : tdec.scenarios) empty += s.count == 0;
  // (Low load, high t) and (high load, low t) cannot occur.
  for (std::size_t s : {2u, 3u, 8u, 9u}) {
    c.expect(tdec.scenarios[s].count == 0, "impossible combination sc" + std::to_string(s + 1) + " was populated");
  }
  c.expect(empty == 4, std::to_string(empty) + " empty scenarios");
  return c.outcome("nested N=1e4: " + std::to_string(dec.scenarios.size()) + " scenarios, p total " +
                   Checks::fmt(dec.probability_total()) + "; states file: " + std::to_string(tdec.scenarios.size()) +
                   " scenarios, " + std::to_string(empty) + " empty with null stats; histograms reconcile");
}

Outcome criterion_10() {
  const std::size_t ns[] = {1000, 2500, 5000, 7500, 10000, 25000, 50000};
  const std::size_t ks[] = {3, 6, 12};
  const int table[7][3] = {{10, 10, 10}, {25, 10, 10}, {50, 10, 10}, {50, 25, 10},
                           {50, 50, 10}, {100, 50, 25}, {100, 50, 50}};
  Checks c;
  int matched = 0;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int got = bin_count_first(ns[i], ks[j]);
      matched += got == table[i][j];
      c.expect(got == table[i][j], "(" + std::to_string(ns[i]) + ", " + std::to_string(ks[j]) + ") -> " +
                                       std::to_string(got));
    }
  }
  c.expect(bin_count_first(500, 3) == 10, "(500, 3)");
  c.expect(bin_count_first(100000, 12) == 50, "(1e5, 12)");
  return c.outcome(std::to_string(matched) + "/21 grid cells; (500, 3) -> " + std::to_string(bin_count_first(500, 3)) +
                   ", (1e5, 12) -> " + std::to_string(bin_count_first(100000, 12)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                          criterion_5, criterion_6, criterion_7, criterion_8,
                                                          criterion_9, criterion_10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
