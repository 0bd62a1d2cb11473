#pragma once

#include "fwlab/linalg.hpp"

namespace fwlab {

struct LpSolution {
  bool feasible = false;
  double objective = 0.0;
  Vec x;
};

// Solves  min c'x  s.t.  Ax = b, x >= 0  with a dense two-phase tableau
// simplex using Bland's rule. Sized for the polytope gauge problems
// (<= ~70 rows, a few thousand columns).
LpSolution solve_standard_form_lp(const Mat& A, const Vec& b, const Vec& c);

}  // namespace fwlab
