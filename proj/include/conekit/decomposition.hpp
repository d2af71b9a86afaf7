#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conekit/cones.hpp"
#include "conekit/geometry.hpp"
#include "conekit/tolerance.hpp"
#include "conekit/vec.hpp"

namespace conekit {

// A decomposition x = sum_w parts[w] with parts[w] in the w-th cone; value
// is the family-norm total sum_w ||parts[w]||.
struct Decomposition {
  std::vector<Vec> parts;
  double value = 0.0;
};

enum class AlphaMode { ExactVertex, SampledLowerBound };

const char* alpha_mode_name(AlphaMode mode);

struct AlphaResult {
  double alpha = 0.0;
  AlphaMode mode = AlphaMode::ExactVertex;
  Vec witness;                     // attaining (or best-known) unit argument
  std::vector<Vec> witness_parts;  // tuple form when the sweep runs over product tuples
  long samples = 0;                // points evaluated
};

// Minimizer of sum_w ||c_w|| over all decompositions x = sum_w c_w with
// c_w in the w-th cone. L1/Linf/Polyhedral objectives are encoded exactly;
// L2 converges an outer cutting-plane loop to within gapTol. Throws
// Error(NotDecomposable) when no decomposition exists in direction x.
Decomposition decompose_min(const ConeFamily& family, const NormSpec& norm, const Vec& x,
                            const Tolerance& tol);

// alpha = sup over the unit sphere of the minimal decomposition value.
// ExactVertex (polyhedral norms): the value function is convex and
// positively homogeneous, so the sup is a max over ball vertices.
// SampledLowerBound: max over a sphere mesh, reported as a lower bound.
AlphaResult alpha_conormal(const ConeFamily& family, const NormSpec& norm, AlphaMode mode,
                           int samples, std::uint64_t seed, const Tolerance& tol);

// The bounded positively homogeneous selection: solve at x/||x|| and scale
// the parts by ||x|| (zero maps to the zero decomposition). Ties among
// optimal vertices are broken by the deterministic pivot rule, so repeated
// calls agree and scaling is exact up to rounding.
Decomposition delta_selection(const ConeFamily& family, const NormSpec& norm, const Vec& x,
                              const Tolerance& tol);

}  // namespace conekit
