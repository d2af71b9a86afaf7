#include "conekit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "conekit/errors.hpp"
#include "conekit/kernels.hpp"

namespace conekit {
namespace {

constexpr double kEnterTol = 1e-9;       // reduced-cost threshold for entering
constexpr double kRatioBand = 1e-9;      // leaving-variable tie band
constexpr double kPivotBreakdown = 1e-13;
constexpr double kDriveOutTol = 1e-9;    // pivot threshold when expelling artificials
constexpr int kMaxPivots = 200000;

struct Tableau {
  int m = 0;     // rows
  int nstd = 0;  // structural (standard-form) columns
  int W = 0;     // row width: nstd + #artificials + 1 (rhs)
  std::vector<double> cells;  // m x W, row-major
  Vec cost;                   // reduced-cost row, width W
  std::vector<int> basis;     // basic std/artificial column per row

  double* row(int i) { return cells.data() + static_cast<std::size_t>(i) * W; }
  const double* row(int i) const { return cells.data() + static_cast<std::size_t>(i) * W; }
  double& at(int i, int j) { return cells[static_cast<std::size_t>(i) * W + j]; }
  double at(int i, int j) const { return cells[static_cast<std::size_t>(i) * W + j]; }
  int rhs_col() const { return W - 1; }
};

void pivot(Tableau& tab, int prow, int pcol) {
  const auto& k = kernels::active();
  double piv = tab.at(prow, pcol);
  if (std::fabs(piv) < kPivotBreakdown) {
    throw Error(ErrorKind::SolverError,
                "numerical breakdown: pivot magnitude below 1e-13");
  }
  double inv = 1.0 / piv;
  k.scale(inv, tab.row(prow), tab.W);
  tab.at(prow, pcol) = 1.0;
  for (int r = 0; r < tab.m; ++r) {
    if (r == prow) continue;
    double f = tab.at(r, pcol);
    if (f != 0.0) {
      k.axpy(-f, tab.row(prow), tab.row(r), tab.W);
      tab.at(r, pcol) = 0.0;
    }
  }
  double f = tab.cost[pcol];
  if (f != 0.0) {
    k.axpy(-f, tab.row(prow), tab.cost.data(), tab.W);
    tab.cost[pcol] = 0.0;
  }
  tab.basis[prow] = pcol;
}

enum class SweepResult { Optimal, Unbounded };

SweepResult run_simplex(Tableau& tab) {
  const int rhs = tab.rhs_col();
  for (int iter = 0; iter < kMaxPivots; ++iter) {
    int enter = -1;
    for (int j = 0; j < tab.nstd; ++j) {
      if (tab.cost[j] < -kEnterTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return SweepResult::Optimal;

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.m; ++i) {
      double v = tab.at(i, enter);
      if (v > kPivotBreakdown) {
        double ratio = tab.at(i, rhs) / v;
        if (ratio < best) best = ratio;
      }
    }
    if (!std::isfinite(best)) return SweepResult::Unbounded;

    double band = best + kRatioBand * (1.0 + std::fabs(best));
    int leave = -1;
    int leave_basic = std::numeric_limits<int>::max();
    for (int i = 0; i < tab.m; ++i) {
      double v = tab.at(i, enter);
      if (v > kPivotBreakdown && tab.at(i, rhs) / v <= band && tab.basis[i] < leave_basic) {
        leave = i;
        leave_basic = tab.basis[i];
      }
    }
    pivot(tab, leave, enter);
  }
  throw Error(ErrorKind::SolverError, "simplex iteration limit exceeded");
}

void drop_row(Tableau& tab, int i) {
  tab.cells.erase(tab.cells.begin() + static_cast<std::ptrdiff_t>(i) * tab.W,
                  tab.cells.begin() + static_cast<std::ptrdiff_t>(i + 1) * tab.W);
  tab.basis.erase(tab.basis.begin() + i);
  tab.m -= 1;
}

void validate(const LinearProgram& lp) {
  const std::size_t nv = lp.objective.size();
  require_finite(lp.objective, "lp objective");
  if (lp.rows.size() != lp.rhs.size()) {
    throw Error(ErrorKind::InputError, "lp: rows/rhs length mismatch");
  }
  for (const auto& row : lp.rows) {
    if (row.size() != nv) {
      throw Error(ErrorKind::InputError, "lp: row length does not match objective");
    }
    require_finite(row, "lp row");
  }
  require_finite(lp.rhs, "lp rhs");
  for (int j : lp.nonneg_vars) {
    if (j < 0 || static_cast<std::size_t>(j) >= nv) {
      throw Error(ErrorKind::InputError, "lp: nonneg index out of range");
    }
  }
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp, const Tolerance& tol) {
  tol.validate();
  validate(lp);

  const int nv = static_cast<int>(lp.objective.size());
  const int m = static_cast<int>(lp.rows.size());

  std::vector<bool> nonneg(nv, false);
  for (int j : lp.nonneg_vars) nonneg[j] = true;

  // Standard form: free variables split into (+, -) parts, in index order.
  struct Col {
    int orig;
    double sign;
  };
  std::vector<Col> colmap;
  colmap.reserve(static_cast<std::size_t>(nv) * 2);
  for (int j = 0; j < nv; ++j) {
    colmap.push_back({j, 1.0});
    if (!nonneg[j]) colmap.push_back({j, -1.0});
  }
  const int nstd = static_cast<int>(colmap.size());

  Tableau tab;
  tab.m = m;
  tab.nstd = nstd;
  tab.W = nstd + m + 1;
  tab.cells.assign(static_cast<std::size_t>(m) * tab.W, 0.0);
  tab.cost.assign(tab.W, 0.0);
  tab.basis.resize(m);
  const int rhs = tab.rhs_col();

  std::vector<double> rowsign(m, 1.0);
  for (int i = 0; i < m; ++i) {
    double s = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
    rowsign[i] = s;
    for (int k = 0; k < nstd; ++k) {
      tab.at(i, k) = s * colmap[k].sign * lp.rows[i][colmap[k].orig];
    }
    tab.at(i, nstd + i) = 1.0;  // artificial
    tab.at(i, rhs) = s * lp.rhs[i];
    tab.basis[i] = nstd + i;
  }

  LpOutcome out;

  // Phase 1: minimize the artificial sum from the canonical identity basis.
  if (m > 0) {
    for (int i = 0; i < m; ++i) tab.cost[nstd + i] = 1.0;
    for (int i = 0; i < m; ++i) {
      kernels::active().axpy(-1.0, tab.row(i), tab.cost.data(), tab.W);
    }
    if (run_simplex(tab) == SweepResult::Unbounded) {
      throw Error(ErrorKind::SolverError, "phase-1 objective unbounded");
    }
    double phase1 = -tab.cost[rhs];
    if (phase1 > tol.feas) {
      out.status = LpStatus::Infeasible;
      Vec y(m, 0.0);
      for (int i = 0; i < m; ++i) {
        y[i] = rowsign[i] * (1.0 - tab.cost[nstd + i]);
      }
      double scale = max_abs(y);
      if (scale > 0.0) {
        kernels::active().scale(1.0 / scale, y.data(), y.size());
      }
      out.farkas = std::move(y);
      return out;
    }

    // Expel artificials. Residual basic artificials sit at ~0; snap the rhs
    // before pivoting so near-zero values cannot be amplified.
    for (int i = 0; i < tab.m;) {
      if (tab.basis[i] < nstd) {
        ++i;
        continue;
      }
      tab.at(i, rhs) = 0.0;
      int pcol = -1;
      for (int j = 0; j < nstd; ++j) {
        if (std::fabs(tab.at(i, j)) > kDriveOutTol) {
          pcol = j;
          break;
        }
      }
      if (pcol >= 0) {
        pivot(tab, i, pcol);
        ++i;
      } else {
        drop_row(tab, i);  // redundant constraint
      }
    }
  }

  // Phase 2 on the true objective.
  Vec cstd(nstd, 0.0);
  for (int k = 0; k < nstd; ++k) {
    cstd[k] = colmap[k].sign * lp.objective[colmap[k].orig];
  }
  std::fill(tab.cost.begin(), tab.cost.end(), 0.0);
  for (int k = 0; k < nstd; ++k) tab.cost[k] = cstd[k];
  for (int i = 0; i < tab.m; ++i) {
    double cb = cstd[tab.basis[i]];
    if (cb != 0.0) {
      kernels::active().axpy(-cb, tab.row(i), tab.cost.data(), tab.W);
    }
  }
  if (run_simplex(tab) == SweepResult::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  Vec zstd(nstd, 0.0);
  for (int i = 0; i < tab.m; ++i) {
    double v = tab.at(i, rhs);
    if (v < 0.0 && v >= -tol.feas) v = 0.0;
    zstd[tab.basis[i]] = v;
  }
  Vec x(nv, 0.0);
  for (int k = 0; k < nstd; ++k) {
    if (zstd[k] != 0.0) x[colmap[k].orig] += colmap[k].sign * zstd[k];
  }

  out.status = LpStatus::Optimal;
  out.solution = std::move(x);
  out.value = -tab.cost[rhs];
  out.basis = tab.basis;
  return out;
}

int LpBuilder::add_var(double cost, bool nonneg) {
  cost_.push_back(cost);
  nonneg_.push_back(nonneg);
  return static_cast<int>(cost_.size()) - 1;
}

int LpBuilder::add_row(double rhs) {
  row_terms_.emplace_back();
  rhs_.push_back(rhs);
  return static_cast<int>(rhs_.size()) - 1;
}

void LpBuilder::add_coef(int row, int var, double coef) {
  row_terms_[row].emplace_back(var, coef);
}

LinearProgram LpBuilder::build() const {
  LinearProgram lp;
  lp.objective = cost_;
  const std::size_t nv = cost_.size();
  lp.rows.reserve(row_terms_.size());
  for (const auto& terms : row_terms_) {
    Vec row(nv, 0.0);
    for (const auto& [var, coef] : terms) row[var] += coef;
    lp.rows.push_back(std::move(row));
  }
  lp.rhs = rhs_;
  for (std::size_t j = 0; j < nv; ++j) {
    if (nonneg_[j]) lp.nonneg_vars.push_back(static_cast<int>(j));
  }
  return lp;
}

}  // namespace conekit
