#include "conekit/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "conekit/rng.hpp"
#include "norm_objective.hpp"

namespace conekit {
namespace {

using detail::AffineExpr;
using detail::PointExpr;

detail::NormMinSolution solve_decompose(const ConeFamily& family, const NormSpec& norm,
                                        const Vec& x, const Tolerance& tol) {
  auto assemble = [&](LpBuilder& b) {
    std::vector<PointExpr> gadgets;
    gadgets.reserve(family.cones.size());
    std::vector<std::vector<int>> lambda(family.cones.size());
    for (std::size_t w = 0; w < family.cones.size(); ++w) {
      PointExpr expr(family.dim);
      for (std::size_t k = 0; k < family.cones[w].generators.size(); ++k) {
        int var = b.add_var(0.0, true);
        lambda[w].push_back(var);
        for (int d = 0; d < family.dim; ++d) {
          double g = family.cones[w].generators[k][d];
          if (g != 0.0) expr[d].terms.emplace_back(var, g);
        }
      }
      gadgets.push_back(std::move(expr));
    }
    for (int d = 0; d < family.dim; ++d) {
      int row = b.add_row(x[d]);
      for (std::size_t w = 0; w < family.cones.size(); ++w) {
        for (std::size_t k = 0; k < family.cones[w].generators.size(); ++k) {
          double g = family.cones[w].generators[k][d];
          if (g != 0.0) b.add_coef(row, lambda[w][k], g);
        }
      }
    }
    return gadgets;
  };
  return detail::solve_norm_min(norm, assemble, tol);
}

Decomposition zero_decomposition(const ConeFamily& family) {
  Decomposition dec;
  dec.parts.assign(family.cones.size(), Vec(family.dim, 0.0));
  dec.value = 0.0;
  return dec;
}

std::string vec_to_string(const Vec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

}  // namespace

const char* alpha_mode_name(AlphaMode mode) {
  return mode == AlphaMode::ExactVertex ? "EXACT_VERTEX" : "SAMPLED_LOWER_BOUND";
}

Decomposition decompose_min(const ConeFamily& family, const NormSpec& norm, const Vec& x,
                            const Tolerance& tol) {
  family.validate();
  norm.validate(family.dim);
  tol.validate();
  require_dim(x, family.dim, "decompose_min point");
  require_finite(x, "decompose_min point");

  if (max_abs(x) == 0.0) return zero_decomposition(family);

  // Solve at x/s so feasibility decisions stay scale-relative.
  double s = std::max(1.0, max_abs(x));
  Vec xs = (1.0 / s) * x;
  auto sol = solve_decompose(family, norm, xs, tol);
  if (!sol.feasible) {
    throw Error(ErrorKind::NotDecomposable,
                "no decomposition exists for point " + vec_to_string(x) +
                    " (family not generating in that direction)");
  }

  Decomposition dec;
  dec.parts.reserve(sol.points.size());
  double value = 0.0;
  for (const auto& p : sol.points) {
    Vec part = s * p;
    value += norm_eval(norm, part);
    dec.parts.push_back(std::move(part));
  }
  dec.value = value;
  return dec;
}

AlphaResult alpha_conormal(const ConeFamily& family, const NormSpec& norm, AlphaMode mode,
                           int samples, std::uint64_t seed, const Tolerance& tol) {
  family.validate();
  norm.validate(family.dim);

  std::vector<Vec> sweep;
  if (mode == AlphaMode::ExactVertex) {
    sweep = ball_vertices(norm, family.dim);  // NotPolyhedral for L2
  } else {
    if (samples < 1) throw Error(ErrorKind::InputError, "samples must be >= 1");
    sweep = sphere_mesh(norm, family.dim, samples, seed);
  }

  AlphaResult result;
  result.mode = mode;
  result.samples = static_cast<long>(sweep.size());
  result.alpha = -1.0;
  for (const auto& p : sweep) {
    double value = 0.0;
    try {
      value = decompose_min(family, norm, p, tol).value;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotDecomposable) {
        throw Error(ErrorKind::NotGenerating,
                    std::string("family is not generating: ") + e.what());
      }
      throw;
    }
    if (value > result.alpha) {
      result.alpha = value;
      result.witness = p;
    }
  }
  return result;
}

Decomposition delta_selection(const ConeFamily& family, const NormSpec& norm, const Vec& x,
                              const Tolerance& tol) {
  family.validate();
  norm.validate(family.dim);
  require_dim(x, family.dim, "delta_selection point");
  require_finite(x, "delta_selection point");

  if (max_abs(x) == 0.0) return zero_decomposition(family);

  double nrm = norm_eval(norm, x);
  if (!(nrm > 0.0)) {
    throw Error(ErrorKind::SolverError, "nonzero point evaluated to zero norm");
  }
  Vec unit = (1.0 / nrm) * x;
  Decomposition at_unit = decompose_min(family, norm, unit, tol);

  Decomposition dec;
  dec.parts.reserve(at_unit.parts.size());
  double value = 0.0;
  for (const auto& p : at_unit.parts) {
    Vec part = nrm * p;
    value += norm_eval(norm, part);
    dec.parts.push_back(std::move(part));
  }
  dec.value = value;
  return dec;
}

}  // namespace conekit
