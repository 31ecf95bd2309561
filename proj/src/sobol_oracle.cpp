#include "binsa/sobol_oracle.hpp"

#include "binsa/sampling.hpp"
#include "binsa/simd/kernels.hpp"
#include "binsa/stats.hpp"

namespace binsa {
namespace {

Matrix columns(const Matrix& m, std::size_t first, std::size_t count) {
  Matrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, first + c);
  }
  return out;
}

Matrix hybrid(const Matrix& base, const Matrix& donor, std::size_t col) {
  Matrix out = base;
  for (std::size_t r = 0; r < base.rows(); ++r) out(r, col) = donor(r, col);
  return out;
}

std::vector<double> run(const ModelFunction& model, const Matrix& x) {
  std::vector<double> y = model(x);
  if (y.size() != x.rows()) throw InputError("model returned the wrong number of outputs");
  return y;
}

}  // namespace

PickFreezeDesign make_pick_freeze_design(std::span<const InputSpec> specs, std::size_t n,
                                         std::uint64_t seed, OracleSampler sampler) {
  const std::size_t k = specs.size();
  if (k < 2) throw InputError("pick-freeze needs at least two inputs");
  if (n < 128) throw InputError("pick-freeze needs n >= 128");
  const Matrix unit = sampler == OracleSampler::qmc ? sobol_points(2 * k, n, true, seed)
                                                    : random_points(2 * k, n, seed);
  PickFreezeDesign d;
  d.a = transform_marginals(columns(unit, 0, k), specs);
  d.b = transform_marginals(columns(unit, k, k), specs);
  for (std::size_t i = 0; i < k; ++i) {
    d.a_b.push_back(hybrid(d.a, d.b, i));
    d.b_a.push_back(hybrid(d.b, d.a, i));
  }
  return d;
}

SobolEstimate estimate_sobol(const ModelFunction& model, std::span<const InputSpec> specs,
                             std::size_t n, std::uint64_t seed, OracleSampler sampler) {
  validate_specs(specs);
  const PickFreezeDesign d = make_pick_freeze_design(specs, n, seed, sampler);
  const std::size_t k = d.k();
  const double dn = static_cast<double>(n);

  const std::vector<double> fa = run(model, d.a);
  const std::vector<double> fb = run(model, d.b);
  std::vector<std::vector<double>> fab(k), fba(k);
  for (std::size_t i = 0; i < k; ++i) {
    fab[i] = run(model, d.a_b[i]);
    fba[i] = run(model, d.b_a[i]);
  }

  std::vector<double> pooled(fa);
  pooled.insert(pooled.end(), fb.begin(), fb.end());
  const double f0 = mean(pooled);
  const double v = simd::sum_sq_dev(pooled, f0) / static_cast<double>(pooled.size());
  if (!(v > 0.0)) throw NumericError("insufficient sample");

  SobolEstimate est;
  for (const InputSpec& s : specs) est.names.push_back(s.name);
  est.first_order.resize(k);
  est.closed_second = SymmetricMatrix(k);
  est.second_order = SymmetricMatrix(k);
  est.variance = v;
  est.f0 = f0;
  est.evaluations = d.evaluations();

  std::vector<double> diff(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < n; ++r) diff[r] = fb[r] - fab[i][r];
    const double half_sq = 0.5 * simd::sum_sq_dev(diff, 0.0) / dn;
    est.first_order[i] = (v - half_sq) / v;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const simd::CrossMoments m = simd::cross_moments(fba[i], fab[j], f0, f0);
      const double vij = m.xy / dn;
      const double closed = vij / v;
      est.closed_second.set(i, j, closed);
      est.second_order.set(i, j, closed - (est.first_order[i] + est.first_order[j]));
    }
  }
  return est;
}

SobolEstimate estimate_sobol(const ModelId& model, std::span<const InputSpec> specs,
                             std::size_t n, std::uint64_t seed, OracleSampler sampler) {
  if (specs.size() != model_arity(model)) {
    throw InputError(model_name(model) + ": wrong number of input specs");
  }
  return estimate_sobol([model](const Matrix& x) { return evaluate(model, x); }, specs, n, seed,
                        sampler);
}

}  // namespace binsa
