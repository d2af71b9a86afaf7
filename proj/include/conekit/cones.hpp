#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conekit/tolerance.hpp"
#include "conekit/vec.hpp"

namespace conekit {

// Finitely generated closed cone in V-representation:
// { sum_k lambda_k g_k : lambda_k >= 0 }. The zero vector is always a
// member (empty combination).
struct PolyhedralCone {
  int dim = 0;
  std::vector<Vec> generators;
  std::string label;

  void validate() const;
};

struct ConeFamily {
  int dim = 0;
  std::vector<PolyhedralCone> cones;  // labels must be unique

  int size() const { return static_cast<int>(cones.size()); }
  void validate() const;
};

// Constructive membership verdict. Exactly one of coefficients/separator is
// present: coefficients recombine to the query point, a separator h
// satisfies h.x < 0 <= h.g for every generator g.
struct MembershipCertificate {
  bool member = false;
  std::optional<Vec> coefficients;
  std::optional<Vec> separator;
};

// Decided by LP feasibility with a scale-relative tolerance: a point within
// feasTol*(1+max|x_i|) of the cone counts as a member. The separator comes
// from the Farkas multipliers of the infeasible phase-1 program.
MembershipCertificate cone_membership(const PolyhedralCone& cone, const Vec& x,
                                      const Tolerance& tol);

// Re-runs a certificate's own arithmetic against the verdict.
bool validate_membership(const PolyhedralCone& cone, const Vec& x,
                         const MembershipCertificate& cert, const Tolerance& tol);

struct PropernessResult {
  bool proper = false;
  std::optional<Vec> witness;  // x != 0 with x and -x both members
};

// C proper iff C and -C meet only at 0; decided by one normalized lineality
// LP per coordinate direction.
PropernessResult is_proper(const PolyhedralCone& cone, const Tolerance& tol);

struct DirectionCertificate {
  Vec direction;
  std::vector<Vec> parts;  // one summand per cone, certified members
};

struct GeneratingResult {
  bool generating = false;
  std::vector<DirectionCertificate> certificates;  // all 2n when generating
  std::optional<Vec> failing_direction;
  std::optional<Vec> separator;  // h with h.dir < 0 <= h.g for all generators
};

// The conic hull of the union equals R^n iff every signed basis vector
// decomposes as a sum of cone members; scan order +e1, -e1, +e2, -e2, ...
GeneratingResult is_generating(const ConeFamily& family, const Tolerance& tol);

}  // namespace conekit
