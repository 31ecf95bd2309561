// AVX2 variants. This translation unit is compiled with -mavx2 (and without
// -mfma); it is only entered after the runtime CPU check in dispatch.cpp.

#include <immintrin.h>

#include <cmath>

#include "binsa/simd/kernels.hpp"
#include "reduce.hpp"

namespace binsa::simd {
namespace {

inline double combine_lanes(__m256d acc) {
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

double sum_leaf(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = combine_lanes(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum(const double* x, std::size_t n) { return detail::pairwise_sum(x, n, sum_leaf); }

double sum_sq_dev(const double* x, std::size_t n, double center) {
  auto leaf = [center](const double* p, std::size_t m) {
    const __m256d c = _mm256_set1_pd(center);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), c);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double r = combine_lanes(acc);
    for (; i < m; ++i) {
      const double d = p[i] - center;
      r += d * d;
    }
    return r;
  };
  return detail::pairwise_sum(x, n, leaf);
}

CrossMoments cross_moments(const double* x, const double* y, std::size_t n, double mx,
                           double my) {
  auto leaf = [mx, my](const double* px, const double* py, std::size_t m) {
    const __m256d cx = _mm256_set1_pd(mx);
    const __m256d cy = _mm256_set1_pd(my);
    __m256d xx = _mm256_setzero_pd();
    __m256d yy = _mm256_setzero_pd();
    __m256d xy = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + i), cx);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + i), cy);
      xx = _mm256_add_pd(xx, _mm256_mul_pd(dx, dx));
      yy = _mm256_add_pd(yy, _mm256_mul_pd(dy, dy));
      xy = _mm256_add_pd(xy, _mm256_mul_pd(dx, dy));
    }
    CrossMoments r{combine_lanes(xx), combine_lanes(yy), combine_lanes(xy)};
    for (; i < m; ++i) {
      const double dx = px[i] - mx;
      const double dy = py[i] - my;
      r.xx += dx * dx;
      r.yy += dy * dy;
      r.xy += dx * dy;
    }
    return r;
  };
  return detail::pairwise_moments(x, y, n, leaf);
}

void bin_index(const double* x, std::size_t n, double lo, double width, std::int32_t last,
               std::int32_t* out) {
  const double top = static_cast<double>(last);
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vwidth = _mm256_set1_pd(width);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vtop = _mm256_set1_pd(top);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), vlo), vwidth);
    t = _mm256_floor_pd(t);
    t = _mm256_min_pd(_mm256_max_pd(t, vzero), vtop);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm256_cvttpd_epi32(t));
  }
  for (; i < n; ++i) {
    double t = std::floor((x[i] - lo) / width);
    t = t < 0.0 ? 0.0 : t;
    t = t > top ? top : t;
    out[i] = static_cast<std::int32_t>(t);
  }
}

void cell_index(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::int32_t stride,
                std::int32_t* out) {
  const __m256i vs = _mm256_set1_epi32(stride);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_add_epi32(_mm256_mullo_epi32(va, vs), vb));
  }
  for (; i < n; ++i) out[i] = a[i] * stride + b[i];
}

constexpr KernelTable kTable{Isa::avx2, sum, sum_sq_dev, cross_moments, bin_index, cell_index};

}  // namespace

const KernelTable* avx2_kernels_unchecked() { return &kTable; }

}  // namespace binsa::simd
