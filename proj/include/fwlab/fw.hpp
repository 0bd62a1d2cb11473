#pragma once

#include "fwlab/objectives.hpp"

namespace fwlab {

struct OpenLoop {
  int ell;  // eta_t = ell / (t + ell), ell >= 1
};
struct ExactLineSearch {};
struct ShortStep {
  double L;  // eta_t = min{1, <grad, x - v> / (L ||x - v||_2^2)}
};

using StepRule = std::variant<OpenLoop, ExactLineSearch, ShortStep>;

StepRule make_open_loop(int ell);
StepRule make_exact_line_search();
StepRule make_short_step(double L);

inline double open_loop_eta(int ell, std::int64_t t) {
  return static_cast<double>(ell) / static_cast<double>(t + ell);
}

struct StepState {
  const Vec& x;
  const Vec& v;
  const Vec& grad;
  double gap;
};

// Step size in [0, 1]. Line search is the exact segment minimizer for the
// quadratic kinds and golden-section (interval width 1e-12) otherwise.
double step_size(const StepRule& rule, const Objective& obj, std::int64_t t,
                 const StepState& state);

struct IterateTrace {
  std::vector<double> eta, f, gap, primaldual, min_gap, subopt_ref, subopt_cert;
  std::vector<std::pair<std::int64_t, Vec>> snapshots;
  Vec final_x;
  bool aborted = false;

  std::int64_t size() const { return static_cast<std::int64_t>(f.size()); }
};

// Algorithm: v_t = argmin_{v in C} <grad f(x_t), v>, x_{t+1} = x_t + eta_t (v_t - x_t).
// One LMO call per iteration, shared between the step and the gap. Records
// t = 0..T-1 before each update; primaldual is maintained by the running-min
// formula. A non-finite objective value aborts with a partial trace.
IterateTrace fw_run(const Objective& obj, const FeasibleRegion& region,
                    const StepRule& rule, std::int64_t T, const Vec& x0,
                    const ReferenceSolution& ref, std::int64_t snap_every = 0);

// First LMO vertex of grad f at the region's canonical interior point.
Vec default_start(const Objective& obj, const FeasibleRegion& region);

}  // namespace fwlab
