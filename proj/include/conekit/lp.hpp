#pragma once

#include <optional>
#include <vector>

#include "conekit/tolerance.hpp"
#include "conekit/vec.hpp"

namespace conekit {

// Equality-form linear program: minimize objective.z subject to
// rows[i].z = rhs[i], z[j] >= 0 for j in nonneg_vars, remaining variables
// free.
struct LinearProgram {
  Vec objective;
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<int> nonneg_vars;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  // Present iff Optimal; lives in the original variable space.
  std::optional<Vec> solution;
  std::optional<double> value;
  // Final basic variables by tableau row, as indices into the solver's
  // standard form (free variables split into +/- parts, so indices can
  // exceed the original variable count). Diagnostic, but deterministic:
  // identical inputs give an identical basis.
  std::optional<std::vector<int>> basis;
  // Infeasible case: multipliers y with y.rhs > 0 and y^T col <= 0 for every
  // nonnegative column (== 0 for free columns); normalized to max|y| = 1.
  Vec farkas;
};

// Two-phase primal simplex on a dense tableau. Entering variable: smallest
// index with reduced cost < -1e-9 (Bland). Leaving variable: smallest basic
// index among rows whose ratio lies within 1e-9*(1+|min|) of the minimum
// ratio; the band keeps the pivot path stable under ulp-scale right-hand
// side perturbations, which the homogeneous selections rely on. The initial
// basis is always the artificial identity in row order, so identical inputs
// reproduce the identical outcome, final basis included.
//
// Throws Error(SolverError) on pivot breakdown (|pivot| < 1e-13) or an
// iteration cap hit; both indicate a malformed or pathological instance.
LpOutcome solve_lp(const LinearProgram& lp, const Tolerance& tol);

// Convenience for assembling programs with mixed nonneg/free variables.
class LpBuilder {
 public:
  // Returns the variable index.
  int add_var(double cost, bool nonneg);
  // Returns the row index; coefficients start at zero.
  int add_row(double rhs);
  void add_coef(int row, int var, double coef);

  int num_vars() const { return static_cast<int>(cost_.size()); }
  LinearProgram build() const;

 private:
  Vec cost_;
  std::vector<bool> nonneg_;
  std::vector<std::vector<std::pair<int, double>>> row_terms_;
  Vec rhs_;
};

}  // namespace conekit
