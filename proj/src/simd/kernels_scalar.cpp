#include <cmath>

#include "binsa/simd/kernels.hpp"
#include "reduce.hpp"

namespace binsa::simd {
namespace {

double sum_leaf(const double* x, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += x[i];
    l1 += x[i + 1];
    l2 += x[i + 2];
    l3 += x[i + 3];
  }
  double r = (l0 + l1) + (l2 + l3);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum(const double* x, std::size_t n) { return detail::pairwise_sum(x, n, sum_leaf); }

double sum_sq_dev(const double* x, std::size_t n, double center) {
  auto leaf = [center](const double* p, std::size_t m) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      const double d0 = p[i] - center;
      const double d1 = p[i + 1] - center;
      const double d2 = p[i + 2] - center;
      const double d3 = p[i + 3] - center;
      l0 += d0 * d0;
      l1 += d1 * d1;
      l2 += d2 * d2;
      l3 += d3 * d3;
    }
    double r = (l0 + l1) + (l2 + l3);
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
    double xx[4] = {0.0, 0.0, 0.0, 0.0};
    double yy[4] = {0.0, 0.0, 0.0, 0.0};
    double xy[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      for (std::size_t l = 0; l < 4; ++l) {
        const double dx = px[i + l] - mx;
        const double dy = py[i + l] - my;
        xx[l] += dx * dx;
        yy[l] += dy * dy;
        xy[l] += dx * dy;
      }
    }
    CrossMoments r{(xx[0] + xx[1]) + (xx[2] + xx[3]), (yy[0] + yy[1]) + (yy[2] + yy[3]),
                   (xy[0] + xy[1]) + (xy[2] + xy[3])};
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
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::floor((x[i] - lo) / width);
    t = t < 0.0 ? 0.0 : t;
    t = t > top ? top : t;
    out[i] = static_cast<std::int32_t>(t);
  }
}

void cell_index(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::int32_t stride,
                std::int32_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * stride + b[i];
}

constexpr KernelTable kTable{Isa::scalar, sum, sum_sq_dev, cross_moments, bin_index, cell_index};

}  // namespace

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace binsa::simd
