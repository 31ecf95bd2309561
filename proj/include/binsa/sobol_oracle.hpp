#pragma once

// Reference pick-freeze Sobol' estimator (independent inputs only), used to
// validate the binning estimator.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "binsa/benchmarks.hpp"
#include "binsa/core.hpp"

namespace binsa {

enum class OracleSampler { mc, qmc };

/// Base matrices A and B (model units) and the hybrids
/// A_B^(i) = A with column i from B, B_A^(i) = B with column i from A.
struct PickFreezeDesign {
  Matrix a;
  Matrix b;
  std::vector<Matrix> a_b;
  std::vector<Matrix> b_a;

  std::size_t n() const noexcept { return a.rows(); }
  std::size_t k() const noexcept { return a.cols(); }
  std::size_t evaluations() const noexcept { return n() * (2 * k() + 2); }
};

/// QMC: A and B are the two halves of one scrambled 2k-dimensional Sobol'
/// design; MC: i.i.d. uniforms. Columns are mapped through `specs`.
PickFreezeDesign make_pick_freeze_design(std::span<const InputSpec> specs, std::size_t n,
                                         std::uint64_t seed, OracleSampler sampler);

struct SobolEstimate {
  std::vector<std::string> names;
  std::vector<double> first_order;  // Jansen
  SymmetricMatrix closed_second;    // V_ij^closed / V, includes S_i + S_j
  SymmetricMatrix second_order;     // closed minus both first-order terms
  double variance = 0.0;
  double f0 = 0.0;
  std::size_t evaluations = 0;
};

using ModelFunction = std::function<std::vector<double>(const Matrix&)>;

/// Requires n >= 128 and k >= 2. Throws NumericError("insufficient sample")
/// when the pooled output variance is not positive.
SobolEstimate estimate_sobol(const ModelFunction& model, std::span<const InputSpec> specs,
                             std::size_t n, std::uint64_t seed,
                             OracleSampler sampler = OracleSampler::qmc);

SobolEstimate estimate_sobol(const ModelId& model, std::span<const InputSpec> specs,
                             std::size_t n, std::uint64_t seed,
                             OracleSampler sampler = OracleSampler::qmc);

}  // namespace binsa
