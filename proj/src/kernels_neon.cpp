// NEON kernel variants (aarch64, where NEON is baseline). Two 2-lane
// registers per iteration stand in for the four stripes, so the reduction
// order matches the scalar reference exactly: lanes (0,1) live in acc01,
// lanes (2,3) in acc23, combined as (l0+l1)+(l2+l3).

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "conekit/kernels.hpp"

namespace conekit::kernels {
namespace {

inline double max2(double m, double v) { return v > m ? v : m; }

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
    vst1q_f64(y + i + 2, vaddq_f64(vld1q_f64(y + i + 2), vmulq_f64(va, vld1q_f64(x + i + 2))));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_neon(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] = a * x[i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double r = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
             (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double abs_sum_neon(const double* x, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vabsq_f64(vld1q_f64(x + i)));
    acc23 = vaddq_f64(acc23, vabsq_f64(vld1q_f64(x + i + 2)));
  }
  double r = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
             (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (; i < n; ++i) r += std::fabs(x[i]);
  return r;
}

double weighted_abs_sum_neon(const double* x, const double* w, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vabsq_f64(vld1q_f64(x + i)), vld1q_f64(w + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vabsq_f64(vld1q_f64(x + i + 2)), vld1q_f64(w + i + 2)));
  }
  double r = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
             (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (; i < n; ++i) r += std::fabs(x[i]) * w[i];
  return r;
}

double sum_squares_neon(const double* x, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t v0 = vld1q_f64(x + i);
    float64x2_t v1 = vld1q_f64(x + i + 2);
    acc01 = vaddq_f64(acc01, vmulq_f64(v0, v0));
    acc23 = vaddq_f64(acc23, vmulq_f64(v1, v1));
  }
  double r = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
             (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vmaxq_f64(acc01, vabsq_f64(vld1q_f64(x + i)));
    acc23 = vmaxq_f64(acc23, vabsq_f64(vld1q_f64(x + i + 2)));
  }
  double r = max2(max2(vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1)),
                  max2(vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)));
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]));
  return r;
}

double weighted_max_abs_neon(const double* x, const double* w, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vmaxq_f64(acc01, vmulq_f64(vabsq_f64(vld1q_f64(x + i)), vld1q_f64(w + i)));
    acc23 = vmaxq_f64(acc23, vmulq_f64(vabsq_f64(vld1q_f64(x + i + 2)), vld1q_f64(w + i + 2)));
  }
  double r = max2(max2(vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1)),
                  max2(vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)));
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]) * w[i]);
  return r;
}

}  // namespace

const Ops* neon_ops_impl();

const Ops* neon_ops_impl() {
  static const Ops ops = {
      "neon",
      &axpy_neon,
      &scale_neon,
      &dot_neon,
      &abs_sum_neon,
      &weighted_abs_sum_neon,
      &sum_squares_neon,
      &max_abs_neon,
      &weighted_max_abs_neon,
  };
  return &ops;
}

}  // namespace conekit::kernels

#endif  // aarch64
