#pragma once

#include "fwlab/fw.hpp"

#include <optional>

namespace fwlab {

// Running state for primaldual(x_t) = min_{k<=t} { f(x_t) - f(x_k) + gap(x_k) }.
struct PrimalDualState {
  double best_dual_offset = std::numeric_limits<double>::infinity();
};

std::pair<PrimalDualState, double> primaldual_update(PrimalDualState state,
                                                     double f_t, double gap_t);

enum class Measure { gap, min_gap, primaldual, subopt_ref, subopt_certified };

Measure parse_measure(const std::string& name);  // accepts "subopt" as the certified column
const std::vector<double>& measure_series(const IterateTrace& trace, Measure m);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;  // of log(measure) on log(t)
  std::int64_t t_lo = 0, t_hi = 0;
  double residual = 0.0;   // RMS of the log-log fit
  std::int64_t dropped = 0;  // non-positive values excluded from the fit
};

// OLS of log(measure) on log(t) over t in [t_lo, t_hi]; throws
// "window too small" with fewer than 10 usable points.
RateFit fit_rate_slope(const IterateTrace& trace, Measure measure,
                       std::int64_t t_lo, std::int64_t t_hi);

// Last full decade of numerically clean values: the upper end stops where the
// measure sinks below ~1e2 ulp of the objective scale, the lower end is
// raised to the theory threshold S when S sits inside the decade.
std::pair<std::int64_t, std::int64_t> default_fit_window(
    const IterateTrace& trace, Measure measure,
    std::optional<std::int64_t> S, double value_scale);

}  // namespace fwlab
