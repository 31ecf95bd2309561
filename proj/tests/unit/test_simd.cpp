#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "binsa/core.hpp"
#include "binsa/simd/kernels.hpp"

using namespace binsa;
using namespace binsa::simd;

namespace {

// Independent restatement of the documented reduction order.
double reference_sum(const double* x, std::size_t n) {
  if (n > kLeafSize) {
    const std::size_t h = (n / 2) & ~std::size_t{3};
    return reference_sum(x, h) + reference_sum(x + h, n - h);
  }
  double l[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) l[k] += x[i + k];
  }
  double r = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) r += x[i];
  return r;
}

std::vector<double> wild(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> e(-30, 30);
  std::vector<double> v(n);
  for (auto& x : v) x = std::ldexp(u(rng), e(rng));
  return v;
}

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out;
  if (avx2_kernels()) out.push_back(avx2_kernels());
  if (neon_kernels()) out.push_back(neon_kernels());
  return out;
}

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar sum follows the documented order") {
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 255u, 256u, 257u, 1000u, 4099u, 100003u}) {
    const auto v = wild(n, n + 1);
    CHECK(same_bits(scalar_kernels().sum(v.data(), n), reference_sum(v.data(), n)));
  }
}

TEST_CASE("vector kernels are bitwise equal to the scalar reference") {
  const auto vs = variants();
  MESSAGE("vector variants available: " << vs.size());
  const KernelTable& s = scalar_kernels();
  for (const KernelTable* t : vs) {
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 8u, 13u, 255u, 256u, 257u, 511u, 1029u, 65537u}) {
      const auto x = wild(n, 3 * n + 1);
      const auto y = wild(n, 7 * n + 2);
      // Unaligned starts as well.
      for (std::size_t off : {0u, 1u}) {
        if (off > n) continue;
        const double* px = x.data() + off;
        const double* py = y.data() + off;
        const std::size_t m = n - off;
        CHECK(same_bits(t->sum(px, m), s.sum(px, m)));
        CHECK(same_bits(t->sum_sq_dev(px, m, 0.125), s.sum_sq_dev(px, m, 0.125)));
        const CrossMoments a = t->cross_moments(px, py, m, 0.01, -0.02);
        const CrossMoments b = s.cross_moments(px, py, m, 0.01, -0.02);
        CHECK(same_bits(a.xx, b.xx));
        CHECK(same_bits(a.yy, b.yy));
        CHECK(same_bits(a.xy, b.xy));
      }
    }
  }
}

TEST_CASE("bin and cell index kernels agree across variants") {
  const KernelTable& s = scalar_kernels();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3, 7);
  std::vector<double> x(1031);
  for (auto& v : x) v = u(rng);
  // Edges and the extremes of the range.
  x[0] = -3.0;
  x[1] = 7.0;
  x[2] = -3.0 + 10.0 / 13 * 5;
  x[3] = -10.0;
  x[4] = 50.0;
  const double lo = -3.0, width = 10.0 / 13;
  std::vector<std::int32_t> ref(x.size()), got(x.size());
  s.bin_index(x.data(), x.size(), lo, width, 12, ref.data());
  CHECK(ref[0] == 0);
  CHECK(ref[1] == 12);
  CHECK(ref[3] == 0);
  CHECK(ref[4] == 12);
  for (std::int32_t b : ref) {
    CHECK(b >= 0);
    CHECK(b <= 12);
  }
  std::vector<std::int32_t> a(x.size()), bb(x.size()), cell_ref(x.size()), cell_got(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    a[i] = ref[i];
    bb[i] = static_cast<std::int32_t>(i % 13);
  }
  s.cell_index(a.data(), bb.data(), a.size(), 13, cell_ref.data());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(cell_ref[i] == a[i] * 13 + bb[i]);
  for (const KernelTable* t : variants()) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 1031u}) {
      t->bin_index(x.data(), n, lo, width, 12, got.data());
      for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == ref[i]);
      t->cell_index(a.data(), bb.data(), n, 13, cell_got.data());
      for (std::size_t i = 0; i < n; ++i) CHECK(cell_got[i] == cell_ref[i]);
    }
  }
}

TEST_CASE("runtime selection can be forced and reset") {
  const Isa detected = detect_isa();
  force_isa(Isa::scalar);
  CHECK(active().isa == Isa::scalar);
  const auto v = wild(5000, 99);
  const double scalar_sum = sum(v);
  reset_isa();
  CHECK(same_bits(sum(v), scalar_sum));
  if (detected != Isa::scalar) CHECK(active().isa == detected);
  if (!neon_kernels()) CHECK_THROWS_AS(force_isa(Isa::neon), InputError);
  reset_isa();
}

TEST_CASE("span wrappers validate lengths") {
  std::vector<double> x(4, 1.0), y(3, 1.0);
  CHECK_THROWS_AS(cross_moments(x, y, 0, 0), InputError);
  std::vector<std::int32_t> out(3);
  CHECK_THROWS_AS(bin_index(x, 0.0, 1.0, 3, out), InputError);
}

}
