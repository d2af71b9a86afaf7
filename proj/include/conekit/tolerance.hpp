#pragma once

#include "conekit/errors.hpp"

namespace conekit {

// Shared tolerance policy. feas: LP feasibility decisions; mem: membership
// and certificate re-validation; gap: cutting-plane termination for the
// Euclidean norm objective.
struct Tolerance {
  double feas = 1e-9;
  double mem = 1e-7;
  double gap = 1e-7;

  void validate() const {
    if (!(feas > 0.0) || !(mem > 0.0) || !(gap > 0.0)) {
      throw Error(ErrorKind::InputError, "tolerances must be strictly positive");
    }
    if (feas > mem) {
      throw Error(ErrorKind::InputError, "feasTol must not exceed memTol");
    }
  }
};

}  // namespace conekit
