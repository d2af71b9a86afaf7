// AVX2 kernel variants. Compiled with -mavx2 on x86-64 only; callers reach
// these through the dispatch table after a runtime CPU check. Each kernel
// reproduces the scalar reference bit for bit: elementwise ops use mul+add
// (no FMA), reductions keep the 4-lane striped order with the
// (acc0+acc1)+(acc2+acc3) combine, tails run the same scalar loop.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "conekit/kernels.hpp"

namespace conekit::kernels {
namespace {

inline double max2(double m, double v) { return v > m ? v : m; }

inline __m256d abs4(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

// result = (lane0 + lane1) + (lane2 + lane3)
inline double hsum_striped(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);        // lanes 0,1
  __m128d hi = _mm256_extractf128_pd(acc, 1);      // lanes 2,3
  __m128d pair = _mm_hadd_pd(lo, hi);              // (l0+l1, l2+l3)
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

// result = max(max(lane0, lane1), max(lane2, lane3)); all inputs >= +0.0
inline double hmax_striped(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d m01 = _mm_max_sd(lo, _mm_unpackhi_pd(lo, lo));
  __m128d m23 = _mm_max_sd(hi, _mm_unpackhi_pd(hi, hi));
  return _mm_cvtsd_f64(_mm_max_sd(m01, m23));
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] = a * x[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double r = hsum_striped(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double abs_sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, abs4(_mm256_loadu_pd(x + i)));
  }
  double r = hsum_striped(acc);
  for (; i < n; ++i) r += std::fabs(x[i]);
  return r;
}

double weighted_abs_sum_avx2(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(abs4(_mm256_loadu_pd(x + i)), _mm256_loadu_pd(w + i)));
  }
  double r = hsum_striped(acc);
  for (; i < n; ++i) r += std::fabs(x[i]) * w[i];
  return r;
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double r = hsum_striped(acc);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

double max_abs_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, abs4(_mm256_loadu_pd(x + i)));
  }
  double r = hmax_striped(acc);
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]));
  return r;
}

double weighted_max_abs_avx2(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_mul_pd(abs4(_mm256_loadu_pd(x + i)), _mm256_loadu_pd(w + i)));
  }
  double r = hmax_striped(acc);
  for (; i < n; ++i) r = max2(r, std::fabs(x[i]) * w[i]);
  return r;
}

}  // namespace

const Ops* avx2_ops_impl();

const Ops* avx2_ops_impl() {
  static const Ops ops = {
      "avx2",
      &axpy_avx2,
      &scale_avx2,
      &dot_avx2,
      &abs_sum_avx2,
      &weighted_abs_sum_avx2,
      &sum_squares_avx2,
      &max_abs_avx2,
      &weighted_max_abs_avx2,
  };
  return &ops;
}

}  // namespace conekit::kernels

#endif  // x86-64
