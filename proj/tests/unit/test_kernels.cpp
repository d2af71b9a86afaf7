#include "conekit/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"

using namespace conekit;

namespace {

std::vector<double> random_array(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    x = lo + (hi - lo) * u;
  }
  return v;
}

bool bit_equal(double a, double b) {
  std::uint64_t ua, ub;
  std::memcpy(&ua, &a, sizeof(a));
  std::memcpy(&ub, &b, sizeof(b));
  return ua == ub;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar backend is always available and active() resolves") {
  auto backends = kernels::available_backends();
  REQUIRE(!backends.empty());
  CHECK(backends.front() == kernels::Backend::Scalar);
  CHECK(kernels::ops_for(kernels::Backend::Scalar) != nullptr);
  CHECK(&kernels::active() != nullptr);
}

TEST_CASE("SIMD variants are bit-identical to the scalar reference") {
  const auto& ref = kernels::scalar_ops();
  std::mt19937_64 rng(0x51f0beefULL);

  for (auto backend : kernels::available_backends()) {
    if (backend == kernels::Backend::Scalar) continue;
    const auto* simd = kernels::ops_for(backend);
    REQUIRE(simd != nullptr);
    INFO("backend ", kernels::backend_name(backend));

    // Lengths cover empty input, sub-block tails, and multi-block bodies.
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 31u, 64u, 67u, 200u, 1001u}) {
      for (int rep = 0; rep < 8; ++rep) {
        auto x = random_array(rng, n, -50.0, 50.0);
        auto w = random_array(rng, n, 0.01, 9.0);
        auto y0 = random_array(rng, n, -20.0, 20.0);
        double a = -3.75 + 0.5 * rep;

        auto y_ref = y0;
        auto y_simd = y0;
        ref.axpy(a, x.data(), y_ref.data(), n);
        simd->axpy(a, x.data(), y_simd.data(), n);
        CHECK(bit_equal(y_ref, y_simd));

        auto s_ref = x;
        auto s_simd = x;
        ref.scale(a, s_ref.data(), n);
        simd->scale(a, s_simd.data(), n);
        CHECK(bit_equal(s_ref, s_simd));

        CHECK(bit_equal(ref.dot(x.data(), y0.data(), n), simd->dot(x.data(), y0.data(), n)));
        CHECK(bit_equal(ref.abs_sum(x.data(), n), simd->abs_sum(x.data(), n)));
        CHECK(bit_equal(ref.weighted_abs_sum(x.data(), w.data(), n),
                        simd->weighted_abs_sum(x.data(), w.data(), n)));
        CHECK(bit_equal(ref.sum_squares(x.data(), n), simd->sum_squares(x.data(), n)));
        CHECK(bit_equal(ref.max_abs(x.data(), n), simd->max_abs(x.data(), n)));
        CHECK(bit_equal(ref.weighted_max_abs(x.data(), w.data(), n),
                        simd->weighted_max_abs(x.data(), w.data(), n)));
      }
    }
  }
}

TEST_CASE("reduction kernels agree with naive formulas to rounding") {
  const auto& k = kernels::active();
  std::mt19937_64 rng(77);
  auto x = random_array(rng, 257, -10.0, 10.0);
  auto y = random_array(rng, 257, -10.0, 10.0);

  double naive_dot = 0, naive_abs = 0, naive_sq = 0, naive_max = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    naive_dot += x[i] * y[i];
    naive_abs += std::fabs(x[i]);
    naive_sq += x[i] * x[i];
    naive_max = std::max(naive_max, std::fabs(x[i]));
  }
  CHECK(k.dot(x.data(), y.data(), x.size()) == doctest::Approx(naive_dot).epsilon(1e-12));
  CHECK(k.abs_sum(x.data(), x.size()) == doctest::Approx(naive_abs).epsilon(1e-12));
  CHECK(k.sum_squares(x.data(), x.size()) == doctest::Approx(naive_sq).epsilon(1e-12));
  CHECK(k.max_abs(x.data(), x.size()) == naive_max);
}

TEST_CASE("set_active rejects unavailable backends and switches available ones") {
  auto before = kernels::active_backend();
#if !defined(__aarch64__) && !defined(_M_ARM64)
  CHECK_THROWS_AS(kernels::set_active(kernels::Backend::Neon), std::invalid_argument);
#endif
  kernels::set_active(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  kernels::set_active(before);
  CHECK(kernels::active_backend() == before);
}
