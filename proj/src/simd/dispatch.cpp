#include <atomic>
#include <cstdlib>
#include <string>

#include "binsa/core.hpp"
#include "binsa/simd/kernels.hpp"

namespace binsa::simd {

#if defined(BINSA_HAVE_AVX2)
const KernelTable* avx2_kernels_unchecked();
#endif
#if defined(BINSA_HAVE_NEON)
const KernelTable* neon_kernels_unchecked();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(BINSA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
      return avx2_kernels();
    case Isa::neon:
      return neon_kernels();
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("BINSA_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == to_string(isa)) {
        if (const KernelTable* t = table_for(isa)) return t;
      }
    }
  }
  return table_for(detect_isa());
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* avx2_kernels() {
#if defined(BINSA_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(BINSA_HAVE_NEON)
  return neon_kernels_unchecked();
#else
  return nullptr;
#endif
}

Isa detect_isa() {
  if (avx2_kernels() != nullptr) return Isa::avx2;
  if (neon_kernels() != nullptr) return Isa::neon;
  return Isa::scalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void force_isa(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) {
    throw InputError("SIMD variant '" + std::string(to_string(isa)) + "' is not available");
  }
  current().store(t, std::memory_order_release);
}

void reset_isa() { current().store(initial_table(), std::memory_order_release); }

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

double sum_sq_dev(std::span<const double> x, double center) {
  return active().sum_sq_dev(x.data(), x.size(), center);
}

CrossMoments cross_moments(std::span<const double> x, std::span<const double> y, double mx,
                           double my) {
  if (x.size() != y.size()) throw InputError("cross_moments: length mismatch");
  return active().cross_moments(x.data(), y.data(), x.size(), mx, my);
}

void bin_index(std::span<const double> x, double lo, double width, std::int32_t last,
               std::span<std::int32_t> out) {
  if (out.size() != x.size()) throw InputError("bin_index: output length mismatch");
  active().bin_index(x.data(), x.size(), lo, width, last, out.data());
}

void cell_index(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                std::int32_t stride, std::span<std::int32_t> out) {
  if (a.size() != b.size() || out.size() != a.size()) {
    throw InputError("cell_index: length mismatch");
  }
  active().cell_index(a.data(), b.data(), a.size(), stride, out.data());
}

}  // namespace binsa::simd
