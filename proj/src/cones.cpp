#include "conekit/cones.hpp"

#include <algorithm>
#include <cmath>

#include "conekit/lp.hpp"

namespace conekit {
namespace {

Vec combine(const std::vector<Vec>& generators, const Vec& lambda, int dim) {
  Vec out(dim, 0.0);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (lambda[k] != 0.0) {
      kernels::active().axpy(lambda[k], generators[k].data(), out.data(), out.size());
    }
  }
  return out;
}

Vec clip_nonneg(Vec v, double tol) {
  for (auto& x : v) {
    if (x < 0.0 && x >= -tol) x = 0.0;
  }
  return v;
}

}  // namespace

void PolyhedralCone::validate() const {
  if (dim < 1) throw Error(ErrorKind::InputError, "cone dimension must be positive");
  if (generators.empty()) {
    throw Error(ErrorKind::InputError, "cone '" + label + "' has no generators");
  }
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) {
      throw Error(ErrorKind::InputError,
                  "cone '" + label + "' has a generator of wrong dimension");
    }
    require_finite(g, "cone generator");
  }
}

void ConeFamily::validate() const {
  if (dim < 1) throw Error(ErrorKind::InputError, "family dimension must be positive");
  if (cones.empty()) throw Error(ErrorKind::InputError, "at least one cone required");
  for (const auto& c : cones) {
    c.validate();
    if (c.dim != dim) {
      throw Error(ErrorKind::InputError,
                  "cone '" + c.label + "' dimension differs from the family's");
    }
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (cones[i].label == cones[j].label) {
        throw Error(ErrorKind::InputError, "duplicate cone label '" + cones[i].label + "'");
      }
    }
  }
}

MembershipCertificate cone_membership(const PolyhedralCone& cone, const Vec& x,
                                      const Tolerance& tol) {
  cone.validate();
  require_dim(x, cone.dim, "cone_membership point");
  require_finite(x, "cone_membership point");

  // Scale-relative feasibility: solve at x/s with s = max(1, max|x_i|).
  double s = std::max(1.0, max_abs(x));
  LpBuilder b;
  std::vector<int> lambda(cone.generators.size());
  for (std::size_t k = 0; k < cone.generators.size(); ++k) lambda[k] = b.add_var(0.0, true);
  for (int d = 0; d < cone.dim; ++d) {
    int row = b.add_row(x[d] / s);
    for (std::size_t k = 0; k < cone.generators.size(); ++k) {
      if (cone.generators[k][d] != 0.0) b.add_coef(row, lambda[k], cone.generators[k][d]);
    }
  }
  LpOutcome out = solve_lp(b.build(), tol);

  MembershipCertificate cert;
  if (out.status == LpStatus::Optimal) {
    cert.member = true;
    cert.coefficients = clip_nonneg(s * (*out.solution), tol.feas * s);
  } else {
    cert.member = false;
    cert.separator = negate(out.farkas);
  }
  return cert;
}

bool validate_membership(const PolyhedralCone& cone, const Vec& x,
                         const MembershipCertificate& cert, const Tolerance& tol) {
  double scale = 1.0 + max_abs(x);
  if (cert.member != cert.coefficients.has_value()) return false;
  if (cert.member == cert.separator.has_value()) return false;
  if (cert.member) {
    const Vec& lambda = *cert.coefficients;
    if (lambda.size() != cone.generators.size()) return false;
    for (double l : lambda) {
      if (l < -tol.mem) return false;
    }
    Vec rebuilt = combine(cone.generators, lambda, cone.dim);
    return near(rebuilt, x, tol.mem * scale);
  }
  const Vec& h = *cert.separator;
  if (h.size() != x.size()) return false;
  if (dot(h, x) >= -tol.feas * scale) return false;  // strictly separates x
  for (const auto& g : cone.generators) {
    if (dot(h, g) < -tol.mem * (1.0 + max_abs(g))) return false;
  }
  return true;
}

PropernessResult is_proper(const PolyhedralCone& cone, const Tolerance& tol) {
  cone.validate();
  // The lineality space C ∩ -C is symmetric, so it is nontrivial iff some
  // member pair (x, -x) has x_d = 1 for some coordinate d.
  for (int d = 0; d < cone.dim; ++d) {
    LpBuilder b;
    std::vector<int> lam(cone.generators.size()), mu(cone.generators.size());
    for (std::size_t k = 0; k < cone.generators.size(); ++k) lam[k] = b.add_var(0.0, true);
    for (std::size_t k = 0; k < cone.generators.size(); ++k) mu[k] = b.add_var(0.0, true);
    for (int r = 0; r < cone.dim; ++r) {
      int row = b.add_row(0.0);  // G lam + G mu = 0
      for (std::size_t k = 0; k < cone.generators.size(); ++k) {
        double g = cone.generators[k][r];
        if (g != 0.0) {
          b.add_coef(row, lam[k], g);
          b.add_coef(row, mu[k], g);
        }
      }
    }
    int normalize = b.add_row(1.0);  // (G lam)_d = 1
    for (std::size_t k = 0; k < cone.generators.size(); ++k) {
      double g = cone.generators[k][d];
      if (g != 0.0) b.add_coef(normalize, lam[k], g);
    }
    LpOutcome out = solve_lp(b.build(), tol);
    if (out.status == LpStatus::Optimal) {
      Vec lambda(cone.generators.size());
      for (std::size_t k = 0; k < cone.generators.size(); ++k) lambda[k] = (*out.solution)[lam[k]];
      return {false, combine(cone.generators, lambda, cone.dim)};
    }
  }
  return {true, std::nullopt};
}

GeneratingResult is_generating(const ConeFamily& family, const Tolerance& tol) {
  family.validate();
  GeneratingResult result;
  result.generating = true;

  for (int d = 0; d < family.dim; ++d) {
    for (double sign : {1.0, -1.0}) {
      Vec dir(family.dim, 0.0);
      dir[d] = sign;

      LpBuilder b;
      std::vector<std::vector<int>> lambda(family.cones.size());
      for (std::size_t w = 0; w < family.cones.size(); ++w) {
        for (std::size_t k = 0; k < family.cones[w].generators.size(); ++k) {
          lambda[w].push_back(b.add_var(0.0, true));
        }
      }
      for (int r = 0; r < family.dim; ++r) {
        int row = b.add_row(dir[r]);
        for (std::size_t w = 0; w < family.cones.size(); ++w) {
          for (std::size_t k = 0; k < family.cones[w].generators.size(); ++k) {
            double g = family.cones[w].generators[k][r];
            if (g != 0.0) b.add_coef(row, lambda[w][k], g);
          }
        }
      }
      LpOutcome out = solve_lp(b.build(), tol);
      if (out.status == LpStatus::Optimal) {
        DirectionCertificate cert;
        cert.direction = dir;
        for (std::size_t w = 0; w < family.cones.size(); ++w) {
          Vec coeff(family.cones[w].generators.size());
          for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] = (*out.solution)[lambda[w][k]];
          cert.parts.push_back(combine(family.cones[w].generators, coeff, family.dim));
        }
        result.certificates.push_back(std::move(cert));
      } else {
        result.generating = false;
        result.failing_direction = dir;
        result.separator = negate(out.farkas);
        return result;
      }
    }
  }
  return result;
}

}  // namespace conekit
