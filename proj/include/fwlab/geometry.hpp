#pragma once

#include "fwlab/linalg.hpp"

#include <variant>
#include <vector>

namespace fwlab {

// Feasible regions. All values are immutable after construction; lmo, c_norm
// and sample_point are pure functions and safe to call concurrently.

struct LpBall {
  double p;       // >= 1, may be +inf
  double radius;  // > 0
  int dim;        // >= 1
};

struct VertexPolytope {
  std::vector<Vec> vertices;  // >= 1 vertex, equal dimensions, no duplicates
};

struct NuclearBall {
  double radius;  // > 0
  int rows, cols;
  // points are rows x cols matrices flattened row-major: (i,j) -> i*cols + j
};

using FeasibleRegion = std::variant<LpBall, VertexPolytope, NuclearBall>;

FeasibleRegion make_lp_ball(double p, double radius, int dim);
FeasibleRegion make_vertex_polytope(std::vector<Vec> vertices);
FeasibleRegion make_nuclear_ball(double radius, int rows, int cols);

int region_dim(const FeasibleRegion& region);

struct LmoResult {
  Vec vertex;
  double inner_product;    // <direction, vertex>
  bool degenerate = false; // direction was zero; vertex is the canonical one
};

// argmin_{v in C} <direction, v>.
LmoResult lmo(const FeasibleRegion& region, const Vec& direction);

// Gauge of (C - C)/2; for the symmetric ball regions this is the natural
// norm scaled by 1/radius. Polytope gauges are solved with the bundled
// simplex routine and supported up to 64 vertices.
double c_norm(const FeasibleRegion& region, const Vec& x);

enum class SampleMode { interior, boundary, vertex_mixture };

// Deterministic in (seed, mode); result lies in C within 1e-9.
Vec sample_point(const FeasibleRegion& region, std::uint64_t seed, SampleMode mode);

bool region_contains(const FeasibleRegion& region, const Vec& x, double tol = 1e-9);

// Canonical interior point (origin for balls, vertex centroid for polytopes).
Vec region_center(const FeasibleRegion& region);

}  // namespace fwlab
