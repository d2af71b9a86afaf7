#include "conekit/kernels.hpp"

#include <cmath>

// Reference kernels. These define the semantics; the SIMD variants must
// reproduce them bit for bit (see the striping contract in kernels.hpp).

namespace conekit::kernels {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = a * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += a[i + 0] * b[i + 0];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  double r = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double abs_sum_scalar(const double* x, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += std::fabs(x[i + 0]);
    acc1 += std::fabs(x[i + 1]);
    acc2 += std::fabs(x[i + 2]);
    acc3 += std::fabs(x[i + 3]);
  }
  double r = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) r += std::fabs(x[i]);
  return r;
}

double weighted_abs_sum_scalar(const double* x, const double* w, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += std::fabs(x[i + 0]) * w[i + 0];
    acc1 += std::fabs(x[i + 1]) * w[i + 1];
    acc2 += std::fabs(x[i + 2]) * w[i + 2];
    acc3 += std::fabs(x[i + 3]) * w[i + 3];
  }
  double r = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) r += std::fabs(x[i]) * w[i];
  return r;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += x[i + 0] * x[i + 0];
    acc1 += x[i + 1] * x[i + 1];
    acc2 += x[i + 2] * x[i + 2];
    acc3 += x[i + 3] * x[i + 3];
  }
  double r = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

inline double max2(double m, double v) { return v > m ? v : m; }

double max_abs_scalar(const double* x, std::size_t n) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m0 = max2(m0, std::fabs(x[i + 0]));
    m1 = max2(m1, std::fabs(x[i + 1]));
    m2 = max2(m2, std::fabs(x[i + 2]));
    m3 = max2(m3, std::fabs(x[i + 3]));
  }
  double r = max2(max2(m0, m1), max2(m2, m3));
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]));
  return r;
}

double weighted_max_abs_scalar(const double* x, const double* w, std::size_t n) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m0 = max2(m0, std::fabs(x[i + 0]) * w[i + 0]);
    m1 = max2(m1, std::fabs(x[i + 1]) * w[i + 1]);
    m2 = max2(m2, std::fabs(x[i + 2]) * w[i + 2]);
    m3 = max2(m3, std::fabs(x[i + 3]) * w[i + 3]);
  }
  double r = max2(max2(m0, m1), max2(m2, m3));
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]) * w[i]);
  return r;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",
      &axpy_scalar,
      &scale_scalar,
      &dot_scalar,
      &abs_sum_scalar,
      &weighted_abs_sum_scalar,
      &sum_squares_scalar,
      &max_abs_scalar,
      &weighted_max_abs_scalar,
  };
  return ops;
}

}  // namespace conekit::kernels
