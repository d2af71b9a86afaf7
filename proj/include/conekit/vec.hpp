#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "conekit/errors.hpp"
#include "conekit/kernels.hpp"

namespace conekit {

// Coordinate vectors are plain std::vector<double>; invariants (finiteness,
// matching dimension) are enforced at module boundaries.
using Vec = std::vector<double>;

inline void require_finite(const Vec& x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InputError, std::string(what) + ": entries must be finite");
    }
  }
}

inline void require_dim(const Vec& x, std::size_t dim, const char* what) {
  if (x.size() != dim) {
    throw Error(ErrorKind::InputError,
                std::string(what) + ": expected dimension " + std::to_string(dim) +
                    ", got " + std::to_string(x.size()));
  }
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  kernels::active().axpy(1.0, b.data(), r.data(), r.size());
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  kernels::active().axpy(-1.0, b.data(), r.data(), r.size());
  return r;
}

inline Vec operator*(double a, const Vec& x) {
  Vec r = x;
  kernels::active().scale(a, r.data(), r.size());
  return r;
}

inline Vec negate(const Vec& x) { return -1.0 * x; }

inline double dot(const Vec& a, const Vec& b) {
  return kernels::active().dot(a.data(), b.data(), a.size());
}

inline double max_abs(const Vec& x) {
  return kernels::active().max_abs(x.data(), x.size());
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline bool near(const Vec& a, const Vec& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace conekit
