#include "conekit/geometry.hpp"

#include <cmath>
#include <cstddef>

#include "conekit/lp.hpp"
#include "conekit/rng.hpp"

namespace conekit {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_weights(const Vec& w, int dim) {
  if (w.empty()) return;
  if (static_cast<int>(w.size()) != dim) {
    throw Error(ErrorKind::InputError, "norm weights length does not match dimension");
  }
  for (double v : w) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InputError, "norm weights must be strictly positive finite");
    }
  }
}

// min { sum lambda : sum lambda_j v_j = x, lambda >= 0 } — the gauge of
// conv(verts) for a centrally symmetric vertex set.
double polyhedral_gauge(const std::vector<Vec>& verts, const Vec& x) {
  LpBuilder b;
  const int dim = static_cast<int>(x.size());
  std::vector<int> lambda(verts.size());
  for (std::size_t j = 0; j < verts.size(); ++j) lambda[j] = b.add_var(1.0, true);
  for (int d = 0; d < dim; ++d) {
    int row = b.add_row(x[d]);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (verts[j][d] != 0.0) b.add_coef(row, lambda[j], verts[j][d]);
    }
  }
  LpOutcome out = solve_lp(b.build(), Tolerance{});
  if (out.status != LpStatus::Optimal) {
    throw Error(ErrorKind::InputError,
                "polyhedral unit ball does not span the space (gauge undefined)");
  }
  double v = *out.value;
  return v < 0.0 ? 0.0 : v;
}

bool in_convex_hull_of_others(const std::vector<Vec>& verts, std::size_t k) {
  LpBuilder b;
  const int dim = static_cast<int>(verts[k].size());
  std::vector<int> theta;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (j == k) continue;
    theta.push_back(b.add_var(0.0, true));
    idx.push_back(j);
  }
  for (int d = 0; d < dim; ++d) {
    int row = b.add_row(verts[k][d]);
    for (std::size_t t = 0; t < theta.size(); ++t) {
      b.add_coef(row, theta[t], verts[idx[t]][d]);
    }
  }
  int conv = b.add_row(1.0);
  for (int t : theta) b.add_coef(conv, t, 1.0);
  return solve_lp(b.build(), Tolerance{}).status == LpStatus::Optimal;
}

}  // namespace

const char* norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::L1: return "L1";
    case NormKind::L2: return "L2";
    case NormKind::Linf: return "LINF";
    case NormKind::Polyhedral: return "POLYHEDRAL";
  }
  return "UNKNOWN";
}

void NormSpec::validate(int dim) const {
  if (dim < 1) throw Error(ErrorKind::InputError, "dimension must be positive");
  switch (kind) {
    case NormKind::L1:
    case NormKind::Linf:
      check_weights(weights, dim);
      if (!ball_verts.empty()) {
        throw Error(ErrorKind::InputError, "ball vertices only apply to POLYHEDRAL norms");
      }
      return;
    case NormKind::L2:
      if (!weights.empty() || !ball_verts.empty()) {
        throw Error(ErrorKind::InputError, "L2 norm takes neither weights nor vertices");
      }
      return;
    case NormKind::Polyhedral: {
      if (!weights.empty()) {
        throw Error(ErrorKind::InputError, "POLYHEDRAL norm takes no weights");
      }
      if (ball_verts.empty()) {
        throw Error(ErrorKind::InputError, "POLYHEDRAL norm requires ball vertices");
      }
      for (const auto& v : ball_verts) {
        require_dim(v, dim, "ball vertex");
        require_finite(v, "ball vertex");
      }
      // Central symmetry: every vertex has its negation in the set.
      for (const auto& v : ball_verts) {
        double scale = 1.0 + max_abs(v);
        bool found = false;
        for (const auto& w : ball_verts) {
          if (near(negate(v), w, 1e-12 * scale)) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw Error(ErrorKind::InputError,
                      "POLYHEDRAL ball vertices must be centrally symmetric");
        }
      }
      // Non-empty interior: the gauge must be finite along every axis.
      for (int d = 0; d < dim; ++d) {
        Vec e(dim, 0.0);
        e[d] = 1.0;
        polyhedral_gauge(ball_verts, e);  // throws if infeasible
      }
      return;
    }
  }
}

double norm_eval(const NormSpec& norm, const Vec& x) {
  require_finite(x, "norm_eval input");
  const auto& k = kernels::active();
  switch (norm.kind) {
    case NormKind::L1:
      if (norm.weights.empty()) return k.abs_sum(x.data(), x.size());
      require_dim(x, norm.weights.size(), "norm_eval input");
      return k.weighted_abs_sum(x.data(), norm.weights.data(), x.size());
    case NormKind::L2:
      return std::sqrt(k.sum_squares(x.data(), x.size()));
    case NormKind::Linf:
      if (norm.weights.empty()) return k.max_abs(x.data(), x.size());
      require_dim(x, norm.weights.size(), "norm_eval input");
      return k.weighted_max_abs(x.data(), norm.weights.data(), x.size());
    case NormKind::Polyhedral:
      if (!norm.ball_verts.empty()) {
        require_dim(x, norm.ball_verts.front().size(), "norm_eval input");
      }
      return polyhedral_gauge(norm.ball_verts, x);
  }
  throw Error(ErrorKind::InputError, "unknown norm kind");
}

std::vector<Vec> ball_vertices(const NormSpec& norm, int dim) {
  norm.validate(dim);
  switch (norm.kind) {
    case NormKind::L2:
      throw Error(ErrorKind::NotPolyhedral, "the L2 unit ball has no vertex description");
    case NormKind::L1: {
      std::vector<Vec> out;
      out.reserve(static_cast<std::size_t>(dim) * 2);
      for (int d = 0; d < dim; ++d) {
        double w = norm.weights.empty() ? 1.0 : norm.weights[d];
        Vec plus(dim, 0.0), minus(dim, 0.0);
        plus[d] = 1.0 / w;
        minus[d] = -1.0 / w;
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
      }
      return out;
    }
    case NormKind::Linf: {
      if (dim > 20) {
        throw Error(ErrorKind::InputError, "LINF vertex enumeration capped at dimension 20");
      }
      std::vector<Vec> out;
      out.reserve(std::size_t{1} << dim);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
        Vec v(dim);
        for (int d = 0; d < dim; ++d) {
          double w = norm.weights.empty() ? 1.0 : norm.weights[d];
          v[d] = ((bits >> d) & 1u) ? -1.0 / w : 1.0 / w;
        }
        out.push_back(std::move(v));
      }
      return out;
    }
    case NormKind::Polyhedral: {
      // Deduplicate, then keep the points not representable by the rest.
      std::vector<Vec> unique;
      for (const auto& v : norm.ball_verts) {
        bool dup = false;
        for (const auto& u : unique) {
          if (near(u, v, 1e-9 * (1.0 + max_abs(v)))) {
            dup = true;
            break;
          }
        }
        if (!dup) unique.push_back(v);
      }
      std::vector<Vec> out;
      for (std::size_t k = 0; k < unique.size(); ++k) {
        if (!in_convex_hull_of_others(unique, k)) out.push_back(unique[k]);
      }
      return out;
    }
  }
  throw Error(ErrorKind::InputError, "unknown norm kind");
}

std::vector<Vec> sphere_mesh(const NormSpec& norm, int dim, int count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorKind::InputError, "sphere_mesh count must be >= 1");
  norm.validate(dim);
  std::vector<Vec> out;
  out.reserve(count);

  if (dim == 1) {
    for (int i = 0; i < count; ++i) {
      Vec d{i % 2 == 0 ? 1.0 : -1.0};
      out.push_back((1.0 / norm_eval(norm, d)) * d);
    }
    return out;
  }

  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
      Vec d{std::cos(theta), std::sin(theta)};
      out.push_back((1.0 / norm_eval(norm, d)) * d);
    }
    return out;
  }

  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    Vec g = rng.gaussian_vec(dim);
    double nrm = norm_eval(norm, g);
    if (nrm < 1e-9) continue;
    out.push_back((1.0 / nrm) * g);
  }
  return out;
}

}  // namespace conekit
