// NEON variants for aarch64. Two float64x2 accumulators carry lanes {0,1}
// and {2,3} so the lane combination matches the scalar reference.

#include <arm_neon.h>

#include <cmath>

#include "binsa/simd/kernels.hpp"
#include "reduce.hpp"

namespace binsa::simd {
namespace {

inline double combine_lanes(float64x2_t lo, float64x2_t hi) {
  const double l0 = vgetq_lane_f64(lo, 0);
  const double l1 = vgetq_lane_f64(lo, 1);
  const double l2 = vgetq_lane_f64(hi, 0);
  const double l3 = vgetq_lane_f64(hi, 1);
  return (l0 + l1) + (l2 + l3);
}

double sum_leaf(const double* x, std::size_t n) {
  float64x2_t a = vdupq_n_f64(0.0);
  float64x2_t b = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a = vaddq_f64(a, vld1q_f64(x + i));
    b = vaddq_f64(b, vld1q_f64(x + i + 2));
  }
  double r = combine_lanes(a, b);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum(const double* x, std::size_t n) { return detail::pairwise_sum(x, n, sum_leaf); }

double sum_sq_dev(const double* x, std::size_t n, double center) {
  auto leaf = [center](const double* p, std::size_t m) {
    const float64x2_t c = vdupq_n_f64(center);
    float64x2_t a = vdupq_n_f64(0.0);
    float64x2_t b = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      const float64x2_t d0 = vsubq_f64(vld1q_f64(p + i), c);
      const float64x2_t d1 = vsubq_f64(vld1q_f64(p + i + 2), c);
      a = vaddq_f64(a, vmulq_f64(d0, d0));
      b = vaddq_f64(b, vmulq_f64(d1, d1));
    }
    double r = combine_lanes(a, b);
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
    const float64x2_t cx = vdupq_n_f64(mx);
    const float64x2_t cy = vdupq_n_f64(my);
    float64x2_t xx0 = vdupq_n_f64(0.0), xx1 = vdupq_n_f64(0.0);
    float64x2_t yy0 = vdupq_n_f64(0.0), yy1 = vdupq_n_f64(0.0);
    float64x2_t xy0 = vdupq_n_f64(0.0), xy1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      const float64x2_t dx0 = vsubq_f64(vld1q_f64(px + i), cx);
      const float64x2_t dx1 = vsubq_f64(vld1q_f64(px + i + 2), cx);
      const float64x2_t dy0 = vsubq_f64(vld1q_f64(py + i), cy);
      const float64x2_t dy1 = vsubq_f64(vld1q_f64(py + i + 2), cy);
      xx0 = vaddq_f64(xx0, vmulq_f64(dx0, dx0));
      xx1 = vaddq_f64(xx1, vmulq_f64(dx1, dx1));
      yy0 = vaddq_f64(yy0, vmulq_f64(dy0, dy0));
      yy1 = vaddq_f64(yy1, vmulq_f64(dy1, dy1));
      xy0 = vaddq_f64(xy0, vmulq_f64(dx0, dy0));
      xy1 = vaddq_f64(xy1, vmulq_f64(dx1, dy1));
    }
    CrossMoments r{combine_lanes(xx0, xx1), combine_lanes(yy0, yy1), combine_lanes(xy0, xy1)};
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
  const float64x2_t vlo = vdupq_n_f64(lo);
  const float64x2_t vwidth = vdupq_n_f64(width);
  const float64x2_t vzero = vdupq_n_f64(0.0);
  const float64x2_t vtop = vdupq_n_f64(top);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t t = vdivq_f64(vsubq_f64(vld1q_f64(x + i), vlo), vwidth);
    t = vrndmq_f64(t);
    t = vminq_f64(vmaxq_f64(t, vzero), vtop);
    vst1_s32(out + i, vmovn_s64(vcvtq_s64_f64(t)));
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
  const int32x4_t vs = vdupq_n_s32(stride);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_s32(out + i, vmlaq_s32(vld1q_s32(b + i), vld1q_s32(a + i), vs));
  }
  for (; i < n; ++i) out[i] = a[i] * stride + b[i];
}

constexpr KernelTable kTable{Isa::neon, sum, sum_sq_dev, cross_moments, bin_index, cell_index};

}  // namespace

const KernelTable* neon_kernels_unchecked() { return &kTable; }

}  // namespace binsa::simd
