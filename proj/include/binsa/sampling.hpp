#pragma once

// Input designs: simple random, scrambled Sobol' quasi-random and full
// factorial points on the unit hypercube, the map through the marginals, and
// pairwise dependence injection.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "binsa/core.hpp"

namespace binsa {

enum class SamplingMethod { mc, qmc, ffd };

std::string_view to_string(SamplingMethod method);
SamplingMethod parse_sampling_method(std::string_view text);

struct SamplingPlan {
  SamplingMethod method = SamplingMethod::qmc;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  bool scramble = true;  // qmc only
};

/// Largest dimension with Joe-Kuo direction numbers compiled in.
inline constexpr std::size_t kMaxSobolDim = 64;

/// First n points (index 0 first, so the unscrambled sequence starts at the
/// origin) in Gray-code order. Scrambling is a seeded linear matrix scramble
/// plus digital shift, which keeps every one-dimensional projection of the
/// first 2^m points stratified over the 2^m dyadic intervals.
Matrix sobol_points(std::size_t dim, std::size_t n, bool scramble, std::uint64_t seed);

/// i.i.d. uniforms in [0, 1) from std::mt19937_64, 53 bits per draw.
Matrix random_points(std::size_t dim, std::size_t n, std::uint64_t seed);

/// Levels per axis: the largest L with L^dims <= n_budget.
std::size_t full_factorial_levels(std::size_t dims, std::size_t n_budget);

/// All L^dims cell-centre points (2i+1)/(2L), first coordinate slowest.
/// Throws InputError("FFD requires ≥ 2 levels") when L < 2.
Matrix full_factorial(std::size_t dims, std::size_t n_budget);

/// Unit-hypercube design for the plan.
Matrix unit_points(const SamplingPlan& plan, std::size_t dim);

/// Standard normal quantile (Wichura AS241, relative error ~1e-16).
/// p must lie in (0, 1).
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double z);

/// Normal marginals map u = 0 and u = 1 (and any deeper tail) to mean ± this
/// many standard deviations.
inline constexpr double kNormalClampSd = 8.2;

/// Inverse CDF of one marginal. Categorical laws return the level index.
double marginal_quantile(const MarginalDistribution& law, double u);

/// Column-wise marginal_quantile.
Matrix transform_marginals(const Matrix& points, std::span<const InputSpec> specs);

enum class DependenceKind { copula, equal_portion };

std::string_view to_string(DependenceKind kind);

/// Dependence between inputs `a` and `b` (column indices).
struct DependencePlan {
  DependenceKind kind = DependenceKind::copula;
  std::size_t a = 0;
  std::size_t b = 1;
  double rho = 0.0;       // copula: gaussian parameter in [-1, 1]
  double fraction = 0.0;  // equal_portion: share of rows coupled, in [0, 1]
  bool negative = false;  // equal_portion: b := (lo_b + hi_b) - a

  static DependencePlan copula(std::size_t a, std::size_t b, double rho);
  static DependencePlan equal_portion(std::size_t a, std::size_t b, double fraction,
                                      bool negative);

  /// Throws InputError when a == b or a parameter is out of range.
  void validate(std::size_t n_inputs) const;
};

/// Returns a copy of `inputs` where column b is coupled to column a. Column a
/// is left bitwise untouched.
///
/// copula: u_a = (a - lo_a)/(hi_a - lo_a), z_a = Φ⁻¹(u_a), z_b = ρ z_a +
/// sqrt(1 - ρ²) z with z drawn from the seeded generator, b = lo_b +
/// (hi_b - lo_b) Φ(z_b). ρ = ±1 maps u_a (or 1 - u_a) directly.
///
/// equal_portion: a seeded random subset of round(fraction·N) rows gets
/// b := a, or b := (lo_b + hi_b) - a when negative.
///
/// Both columns must have uniform marginals.
Matrix apply_dependence(const Matrix& inputs, std::span<const InputSpec> specs,
                        const DependencePlan& plan, std::uint64_t seed);

}  // namespace binsa
