#pragma once

// Data-parallel inner loops of the estimators.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
// picked once at runtime from the CPU features; BINSA_SIMD=scalar|avx2|neon
// in the environment or force_isa() overrides the choice.
//
// All variants produce bitwise identical results. Reductions use one fixed
// order: the range is split in halves (split point rounded down to a multiple
// of 4) until at most kLeafSize elements remain; a leaf is summed in four
// interleaved lanes that are combined as (l0 + l1) + (l2 + l3), then the
// tail (n mod 4 elements) is added left to right. No fused multiply-add is
// used anywhere.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace binsa::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

inline constexpr std::size_t kLeafSize = 256;

struct CrossMoments {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

/// Kernel entry points of one instruction set.
struct KernelTable {
  Isa isa;
  double (*sum)(const double* x, std::size_t n);
  double (*sum_sq_dev)(const double* x, std::size_t n, double center);
  CrossMoments (*cross_moments)(const double* x, const double* y, std::size_t n, double mx,
                                double my);
  // out[i] = clamp(floor((x[i] - lo) / width), 0, last)
  void (*bin_index)(const double* x, std::size_t n, double lo, double width, std::int32_t last,
                    std::int32_t* out);
  // out[i] = a[i] * stride + b[i]
  void (*cell_index)(const std::int32_t* a, const std::int32_t* b, std::size_t n,
                     std::int32_t stride, std::int32_t* out);
};

const KernelTable& scalar_kernels();
/// nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best variant supported by this CPU.
Isa detect_isa();
/// Kernel table currently in use.
const KernelTable& active();
/// Overrides the runtime choice; throws InputError if the ISA is unavailable.
void force_isa(Isa isa);
/// Back to the detected (or environment-selected) variant.
void reset_isa();

// Convenience wrappers over active().
double sum(std::span<const double> x);
double sum_sq_dev(std::span<const double> x, double center);
CrossMoments cross_moments(std::span<const double> x, std::span<const double> y, double mx,
                           double my);
void bin_index(std::span<const double> x, double lo, double width, std::int32_t last,
               std::span<std::int32_t> out);
void cell_index(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                std::int32_t stride, std::span<std::int32_t> out);

}  // namespace binsa::simd
