#pragma once

// Internal: epigraph encodings that put a norm of an affine expression into
// an LP objective. L1 uses the positive/negative split, Linf a shared bound
// variable with slack rows, Polyhedral the vertex decomposition of the unit
// ball, and L2 an outer cutting-plane loop over supporting hyperplanes
// refined until the exact-vs-LP value gap drops below gapTol.

#include <functional>
#include <vector>

#include "conekit/geometry.hpp"
#include "conekit/lp.hpp"
#include "conekit/tolerance.hpp"
#include "conekit/vec.hpp"

namespace conekit::detail {

struct AffineExpr {
  std::vector<std::pair<int, double>> terms;  // (var, coef)
  double constant = 0.0;
};

using PointExpr = std::vector<AffineExpr>;  // one entry per coordinate

// Assembles skeleton variables/rows on the builder and returns the gadget
// point expressions whose norms form the objective. Must be deterministic;
// it is re-run on a fresh builder at every cutting-plane iteration.
using AssembleFn = std::function<std::vector<PointExpr>(LpBuilder&)>;

struct NormMinSolution {
  bool feasible = false;
  Vec farkas;               // infeasible case
  std::vector<Vec> points;  // gadget point values at the optimum
  double value = 0.0;       // sum of exact norms of the points
  LpOutcome lp;             // final solve, for coefficient extraction
};

NormMinSolution solve_norm_min(const NormSpec& norm, const AssembleFn& assemble,
                               const Tolerance& tol);

Vec eval_expr(const PointExpr& expr, const Vec& solution);

}  // namespace conekit::detail
