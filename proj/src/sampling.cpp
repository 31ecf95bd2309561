#include "binsa/sampling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace binsa {
namespace {

struct DirectionEntry {
  std::uint32_t polynomial;
  std::uint32_t degree;
  std::array<std::uint32_t, 18> m;
};

constexpr DirectionEntry kDirections[] = {
#include "direction_numbers.inc"
};
static_assert(std::size(kDirections) == kMaxSobolDim);

// Resolution of generated coordinates; 52 bits convert to double exactly.
constexpr int kBits = 52;
constexpr double kUnit = 1.0 / static_cast<double>(std::uint64_t{1} << kBits);
constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;

std::array<std::uint64_t, kBits> direction_numbers(std::size_t d) {
  const DirectionEntry& e = kDirections[d];
  std::array<std::uint64_t, kBits> m{};
  if (d == 0) {
    m.fill(1);
  } else {
    const std::uint32_t s = e.degree;
    for (std::uint32_t j = 0; j < s; ++j) m[j] = e.m[j];
    for (std::size_t j = s; j < static_cast<std::size_t>(kBits); ++j) {
      std::uint64_t v = m[j - s];
      std::uint64_t pow2 = 1;
      for (std::uint32_t k = 0; k < s; ++k) {
        pow2 <<= 1;
        if ((e.polynomial >> (s - 1 - k)) & 1u) v ^= pow2 * m[j - k - 1];
      }
      m[j] = v;
    }
  }
  std::array<std::uint64_t, kBits> v{};
  for (int j = 0; j < kBits; ++j) v[j] = m[j] << (kBits - 1 - j);
  return v;
}

// Lower-triangular binary matrix with unit diagonal, bit rows MSB first.
struct LinearScramble {
  std::array<std::uint64_t, kBits> rows{};

  std::uint64_t apply(std::uint64_t x) const {
    std::uint64_t out = 0;
    for (int r = 0; r < kBits; ++r) {
      const std::uint64_t bit = static_cast<std::uint64_t>(std::popcount(rows[r] & x) & 1);
      out |= bit << (kBits - 1 - r);
    }
    return out;
  }
};

LinearScramble random_scramble(std::mt19937_64& rng) {
  LinearScramble s;
  for (int r = 0; r < kBits; ++r) {
    const int diag = kBits - 1 - r;
    const std::uint64_t above = kMask & ~((std::uint64_t{1} << (diag + 1)) - 1);
    s.rows[r] = (std::uint64_t{1} << diag) | (rng() & above);
  }
  return s;
}

inline double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

std::string_view to_string(SamplingMethod method) {
  switch (method) {
    case SamplingMethod::mc:
      return "mc";
    case SamplingMethod::qmc:
      return "qmc";
    case SamplingMethod::ffd:
      return "ffd";
  }
  return "unknown";
}

SamplingMethod parse_sampling_method(std::string_view text) {
  if (text == "mc") return SamplingMethod::mc;
  if (text == "qmc") return SamplingMethod::qmc;
  if (text == "ffd") return SamplingMethod::ffd;
  throw InputError("unknown sampler '" + std::string(text) + "' (expected mc, qmc or ffd)");
}

Matrix sobol_points(std::size_t dim, std::size_t n, bool scramble, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxSobolDim) {
    throw InputError("sobol_points: dimension " + std::to_string(dim) +
                     " outside the supported range 1.." + std::to_string(kMaxSobolDim));
  }
  if (n < 1) throw InputError("sobol_points: n must be at least 1");
  if (n > (std::size_t{1} << 40)) throw InputError("sobol_points: n too large");

  std::vector<std::array<std::uint64_t, kBits>> v(dim);
  for (std::size_t d = 0; d < dim; ++d) v[d] = direction_numbers(d);

  std::vector<std::uint64_t> x(dim, 0);
  if (scramble) {
    std::mt19937_64 rng(seed);
    for (std::size_t d = 0; d < dim; ++d) {
      const LinearScramble s = random_scramble(rng);
      for (auto& dir : v[d]) dir = s.apply(dir);
    }
    for (std::size_t d = 0; d < dim; ++d) x[d] = rng() & kMask;
  }

  Matrix out(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const int c = std::countr_zero(static_cast<std::uint64_t>(i));
      for (std::size_t d = 0; d < dim; ++d) x[d] ^= v[d][c];
    }
    for (std::size_t d = 0; d < dim; ++d) out(i, d) = static_cast<double>(x[d]) * kUnit;
  }
  return out;
}

Matrix random_points(std::size_t dim, std::size_t n, std::uint64_t seed) {
  if (n < 1 || dim < 1) throw InputError("random_points: n and dim must be at least 1");
  std::mt19937_64 rng(seed);
  Matrix out(n, dim);
  for (double& u : out.data()) u = uniform53(rng);
  return out;
}

std::size_t full_factorial_levels(std::size_t dims, std::size_t n_budget) {
  if (dims < 1) throw InputError("full_factorial: dims must be at least 1");
  auto fits = [&](std::size_t levels) {
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) {
      if (total > n_budget / levels) return false;
      total *= levels;
    }
    return total <= n_budget;
  };
  std::size_t levels = 1;
  while (fits(levels + 1)) ++levels;
  return levels;
}

Matrix full_factorial(std::size_t dims, std::size_t n_budget) {
  const std::size_t levels = full_factorial_levels(dims, n_budget);
  if (levels < 2) throw InputError("FFD requires ≥ 2 levels");
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= levels;

  Matrix out(total, dims);
  const double step = 1.0 / (2.0 * static_cast<double>(levels));
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (std::size_t d = dims; d-- > 0;) {
      const std::size_t level = rest % levels;
      rest /= levels;
      out(i, d) = static_cast<double>(2 * level + 1) * step;
    }
  }
  return out;
}

Matrix unit_points(const SamplingPlan& plan, std::size_t dim) {
  if (plan.n < 2) throw InputError("sampling plan: n must be at least 2");
  switch (plan.method) {
    case SamplingMethod::mc:
      return random_points(dim, plan.n, plan.seed);
    case SamplingMethod::qmc:
      return sobol_points(dim, plan.n, plan.scramble, plan.seed);
    case SamplingMethod::ffd:
      return full_factorial(dim, plan.n);
  }
  throw InputError("sampling plan: unknown method");
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("normal_quantile: p must lie in (0, 1)");
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
    val = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    val = num / den;
  }
  return q < 0.0 ? -val : val;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double marginal_quantile(const MarginalDistribution& law, double u) {
  switch (law.kind()) {
    case DistributionKind::uniform:
      return law.lo() + u * (law.hi() - law.lo());
    case DistributionKind::normal: {
      double z;
      if (u <= 0.0) {
        z = -kNormalClampSd;
      } else if (u >= 1.0) {
        z = kNormalClampSd;
      } else {
        z = std::clamp(normal_quantile(u), -kNormalClampSd, kNormalClampSd);
      }
      return law.mean() + law.sd() * z;
    }
    case DistributionKind::categorical: {
      const auto& p = law.probabilities();
      double cumulative = 0.0;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        cumulative += p[k];
        if (u < cumulative) return static_cast<double>(k);
      }
      return static_cast<double>(p.size() - 1);
    }
  }
  throw InputError("marginal_quantile: unknown distribution");
}

Matrix transform_marginals(const Matrix& points, std::span<const InputSpec> specs) {
  if (points.cols() != specs.size()) {
    throw InputError("transform_marginals: " + std::to_string(points.cols()) +
                     " columns but " + std::to_string(specs.size()) + " specs");
  }
  Matrix out(points.rows(), points.cols());
  for (std::size_t r = 0; r < points.rows(); ++r) {
    for (std::size_t c = 0; c < points.cols(); ++c) {
      out(r, c) = marginal_quantile(specs[c].distribution, points(r, c));
    }
  }
  return out;
}

std::string_view to_string(DependenceKind kind) {
  return kind == DependenceKind::copula ? "copula" : "equal_portion";
}

DependencePlan DependencePlan::copula(std::size_t a, std::size_t b, double rho) {
  DependencePlan p;
  p.kind = DependenceKind::copula;
  p.a = a;
  p.b = b;
  p.rho = rho;
  return p;
}

DependencePlan DependencePlan::equal_portion(std::size_t a, std::size_t b, double fraction,
                                             bool negative) {
  DependencePlan p;
  p.kind = DependenceKind::equal_portion;
  p.a = a;
  p.b = b;
  p.fraction = fraction;
  p.negative = negative;
  return p;
}

void DependencePlan::validate(std::size_t n_inputs) const {
  if (a == b) throw InputError("dependence plan: the two inputs must differ");
  if (a >= n_inputs || b >= n_inputs) throw InputError("dependence plan: input index out of range");
  if (kind == DependenceKind::copula && !(rho >= -1.0 && rho <= 1.0)) {
    throw InputError("dependence plan: copula parameter must lie in [-1, 1]");
  }
  if (kind == DependenceKind::equal_portion && !(fraction >= 0.0 && fraction <= 1.0)) {
    throw InputError("dependence plan: equal-portion fraction must lie in [0, 1]");
  }
}

Matrix apply_dependence(const Matrix& inputs, std::span<const InputSpec> specs,
                        const DependencePlan& plan, std::uint64_t seed) {
  plan.validate(specs.size());
  if (inputs.cols() != specs.size()) throw InputError("apply_dependence: column/spec mismatch");
  const MarginalDistribution& la = specs[plan.a].distribution;
  const MarginalDistribution& lb = specs[plan.b].distribution;
  if (!la.is_uniform() || !lb.is_uniform()) {
    throw InputError("dependence supported for uniform marginals only");
  }
  const double lo_a = la.lo(), span_a = la.hi() - la.lo();
  const double lo_b = lb.lo(), hi_b = lb.hi(), span_b = lb.hi() - lb.lo();
  const bool same_support = la.lo() == lb.lo() && la.hi() == lb.hi();
  auto unit_a = [&](double a) { return std::clamp((a - lo_a) / span_a, 0.0, 1.0); };

  Matrix out = inputs;
  const std::size_t n = inputs.rows();
  std::mt19937_64 rng(seed);

  if (plan.kind == DependenceKind::copula) {
    const double rho = plan.rho;
    const double tail = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    for (std::size_t r = 0; r < n; ++r) {
      const double u_a = unit_a(inputs(r, plan.a));
      double u_b;
      if (rho == 1.0) {
        u_b = u_a;
      } else if (rho == -1.0) {
        u_b = 1.0 - u_a;
      } else {
        const double z_a = normal_quantile(std::clamp(u_a, 1e-300, std::nextafter(1.0, 0.0)));
        double w = uniform53(rng);
        if (w <= 0.0) w = 0x1p-53;
        const double z = normal_quantile(w);
        u_b = normal_cdf(rho * z_a + tail * z);
      }
      out(r, plan.b) = lo_b + span_b * u_b;
    }
    return out;
  }

  // equal portion: partial Fisher-Yates picks the coupled rows
  const auto count = static_cast<std::size_t>(std::llround(plan.fraction * static_cast<double>(n)));
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(rows[i], rows[j]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = rows[i];
    const double a = inputs(r, plan.a);
    if (same_support) {
      out(r, plan.b) = plan.negative ? (lo_b + hi_b) - a : a;
    } else {
      const double u = unit_a(a);
      out(r, plan.b) = plan.negative ? hi_b - span_b * u : lo_b + span_b * u;
    }
  }
  return out;
}

}  // namespace binsa
