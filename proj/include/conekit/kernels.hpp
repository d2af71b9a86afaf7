#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace conekit::kernels {

// Dense double-precision kernels behind the simplex tableau updates and the
// norm reductions. Every kernel has a scalar reference implementation and,
// where the hardware allows, an AVX2 (x86-64) or NEON (aarch64) variant
// selected once at startup.
//
// Reductions (dot, abs_sum, sum_squares, ...) are defined with a fixed
// 4-lane striped accumulation:
//
//   acc[l] += f(x[4k+l])  for l = 0..3 over full blocks,
//   result = (acc[0] + acc[1]) + (acc[2] + acc[3]),
//   then tail elements appended left to right.
//
// Scalar and SIMD variants implement this exact order, so all backends
// produce bit-identical results and runtime dispatch never changes an
// outcome. Equivalence is enforced by tests/unit/test_kernels.cpp.

enum class Backend { Scalar, Avx2, Neon };

struct Ops {
  const char* name;
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*abs_sum)(const double* x, std::size_t n);
  double (*weighted_abs_sum)(const double* x, const double* w, std::size_t n);
  double (*sum_squares)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  double (*weighted_max_abs)(const double* x, const double* w, std::size_t n);
};

const Ops& scalar_ops();

// nullptr when the backend is not compiled in or the CPU lacks the feature.
const Ops* ops_for(Backend backend);

std::vector<Backend> available_backends();

const char* backend_name(Backend backend);

// The active backend: best available, resolved once. set_active() is a test
// hook; it throws std::invalid_argument for unavailable backends.
const Ops& active();
void set_active(Backend backend);
Backend active_backend();

}  // namespace conekit::kernels
