#include "norm_objective.hpp"

#include <cmath>

#include "conekit/errors.hpp"

namespace conekit::detail {
namespace {

constexpr int kMaxCutIterations = 500;

// t - u.expr - s = u.const with s >= 0 encodes t >= u.(expr + const).
void add_support_row(LpBuilder& b, int t_var, const Vec& u, const PointExpr& expr) {
  double rhs = 0.0;
  for (std::size_t d = 0; d < u.size(); ++d) rhs += u[d] * expr[d].constant;
  int row = b.add_row(rhs);
  b.add_coef(row, t_var, 1.0);
  for (std::size_t d = 0; d < u.size(); ++d) {
    if (u[d] == 0.0) continue;
    for (const auto& [var, coef] : expr[d].terms) b.add_coef(row, var, -u[d] * coef);
  }
  int slack = b.add_var(0.0, true);
  b.add_coef(row, slack, -1.0);
}

// Returns the epigraph variable index for kinds that have one (-1 for L1).
int encode_norm(LpBuilder& b, const NormSpec& norm, const PointExpr& expr,
                const std::vector<Vec>& cuts) {
  const std::size_t dim = expr.size();
  switch (norm.kind) {
    case NormKind::L1: {
      for (std::size_t d = 0; d < dim; ++d) {
        double w = norm.weights.empty() ? 1.0 : norm.weights[d];
        int p = b.add_var(w, true);
        int n = b.add_var(w, true);
        int row = b.add_row(expr[d].constant);  // p - n - terms = const
        b.add_coef(row, p, 1.0);
        b.add_coef(row, n, -1.0);
        for (const auto& [var, coef] : expr[d].terms) b.add_coef(row, var, -coef);
      }
      return -1;
    }
    case NormKind::Linf: {
      int t = b.add_var(1.0, true);
      for (std::size_t d = 0; d < dim; ++d) {
        double w = norm.weights.empty() ? 1.0 : norm.weights[d];
        Vec up(dim, 0.0), un(dim, 0.0);
        up[d] = w;
        un[d] = -w;
        add_support_row(b, t, up, expr);
        add_support_row(b, t, un, expr);
      }
      return t;
    }
    case NormKind::Polyhedral: {
      std::vector<int> mu(norm.ball_verts.size());
      for (std::size_t j = 0; j < mu.size(); ++j) mu[j] = b.add_var(1.0, true);
      for (std::size_t d = 0; d < dim; ++d) {
        int row = b.add_row(expr[d].constant);  // sum mu_j v_j[d] - terms = const
        for (std::size_t j = 0; j < mu.size(); ++j) {
          if (norm.ball_verts[j][d] != 0.0) b.add_coef(row, mu[j], norm.ball_verts[j][d]);
        }
        for (const auto& [var, coef] : expr[d].terms) b.add_coef(row, var, -coef);
      }
      return -1;
    }
    case NormKind::L2: {
      int t = b.add_var(1.0, true);
      for (const auto& u : cuts) add_support_row(b, t, u, expr);
      return t;
    }
  }
  throw Error(ErrorKind::InputError, "unknown norm kind");
}

}  // namespace

Vec eval_expr(const PointExpr& expr, const Vec& solution) {
  Vec out(expr.size(), 0.0);
  for (std::size_t d = 0; d < expr.size(); ++d) {
    double v = expr[d].constant;
    for (const auto& [var, coef] : expr[d].terms) v += coef * solution[var];
    out[d] = v;
  }
  return out;
}

NormMinSolution solve_norm_min(const NormSpec& norm, const AssembleFn& assemble,
                               const Tolerance& tol) {
  // Persistent cut sets per gadget (L2 only); axis directions to start.
  std::vector<std::vector<Vec>> cuts;
  bool cuts_initialized = false;

  for (int iter = 0; iter < kMaxCutIterations; ++iter) {
    LpBuilder b;
    std::vector<PointExpr> gadgets = assemble(b);
    if (!cuts_initialized) {
      cuts.resize(gadgets.size());
      if (norm.kind == NormKind::L2) {
        for (std::size_t g = 0; g < gadgets.size(); ++g) {
          const std::size_t dim = gadgets[g].size();
          for (std::size_t d = 0; d < dim; ++d) {
            Vec up(dim, 0.0), un(dim, 0.0);
            up[d] = 1.0;
            un[d] = -1.0;
            cuts[g].push_back(std::move(up));
            cuts[g].push_back(std::move(un));
          }
        }
      }
      cuts_initialized = true;
    }

    std::vector<int> epi(gadgets.size(), -1);
    for (std::size_t g = 0; g < gadgets.size(); ++g) {
      epi[g] = encode_norm(b, norm, gadgets[g], cuts[g]);
    }

    LpOutcome out = solve_lp(b.build(), tol);
    if (out.status == LpStatus::Infeasible) {
      NormMinSolution sol;
      sol.feasible = false;
      sol.farkas = out.farkas;
      return sol;
    }
    if (out.status == LpStatus::Unbounded) {
      throw Error(ErrorKind::SolverError, "norm objective reported unbounded");
    }

    NormMinSolution sol;
    sol.feasible = true;
    sol.points.reserve(gadgets.size());
    double exact = 0.0;
    for (const auto& g : gadgets) {
      Vec p = eval_expr(g, *out.solution);
      exact += norm_eval(norm, p);
      sol.points.push_back(std::move(p));
    }
    sol.value = exact;

    if (norm.kind != NormKind::L2) {
      sol.lp = std::move(out);
      return sol;
    }

    double gap = exact - *out.value;
    bool added = false;
    if (gap > tol.gap) {
      for (std::size_t g = 0; g < gadgets.size(); ++g) {
        double true_norm = norm_eval(norm, sol.points[g]);
        double epi_value = (*out.solution)[epi[g]];
        if (true_norm > epi_value + 1e-12 * (1.0 + true_norm) && true_norm > 0.0) {
          cuts[g].push_back((1.0 / true_norm) * sol.points[g]);
          added = true;
        }
      }
    }
    if (gap <= tol.gap || !added) {
      sol.lp = std::move(out);
      return sol;
    }
  }
  throw Error(ErrorKind::SolverError, "cutting-plane loop failed to converge");
}

}  // namespace conekit::detail
