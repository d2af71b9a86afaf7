#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conekit/tolerance.hpp"
#include "conekit/vec.hpp"

namespace conekit {

enum class NormKind { L1, L2, Linf, Polyhedral };

// A norm on R^n: weighted l1 / l2 / weighted sup, or the Minkowski gauge of
// a centrally symmetric polytope given by its vertices. These four keep
// every optimization in the toolkit LP-reducible (l2 via cutting planes).
struct NormSpec {
  NormKind kind = NormKind::L2;
  Vec weights;                       // optional, L1/Linf only; strictly positive
  std::vector<Vec> ball_verts;       // Polyhedral only; centrally symmetric

  static NormSpec l1() { return {NormKind::L1, {}, {}}; }
  static NormSpec l1_weighted(Vec w) { return {NormKind::L1, std::move(w), {}}; }
  static NormSpec l2() { return {NormKind::L2, {}, {}}; }
  static NormSpec linf() { return {NormKind::Linf, {}, {}}; }
  static NormSpec linf_weighted(Vec w) { return {NormKind::Linf, std::move(w), {}}; }
  static NormSpec polyhedral(std::vector<Vec> verts) {
    return {NormKind::Polyhedral, {}, std::move(verts)};
  }

  // Exact vertex sweeps are available for every kind except l2.
  bool polyhedral_exact() const { return kind != NormKind::L2; }

  // Full consistency check against the ambient dimension, including central
  // symmetry and non-empty interior for Polyhedral (so the gauge is a norm).
  void validate(int dim) const;
};

const char* norm_kind_name(NormKind kind);

double norm_eval(const NormSpec& norm, const Vec& x);

// Extreme points of the closed unit ball. Throws Error(NotPolyhedral) for
// the l2 ball.
std::vector<Vec> ball_vertices(const NormSpec& norm, int dim);

// `count` unit vectors. dim 2 uses the uniform angular grid (seed ignored)
// so worst-case sweeps are reproducible point sets; dim >= 3 uses seeded
// gaussian directions normalized to the sphere.
std::vector<Vec> sphere_mesh(const NormSpec& norm, int dim, int count, std::uint64_t seed);

}  // namespace conekit
