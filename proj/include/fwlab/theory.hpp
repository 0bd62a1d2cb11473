#pragma once

#include "fwlab/measures.hpp"

namespace fwlab {

enum class GrowthKind { Strong, Weak, Gaps, RelaxedGaps };

struct ProvStrong { double p; double lambda; int n; };
struct ProvWeak { double p; int n; };
struct ProvGaps { double rho; int n; };
struct ProvPolytope {
  double rho, kappa, theta, L, mu, B;
  std::int64_t Q;
  int n, ell;
};
struct ProvManual {};
using Provenance = std::variant<ProvStrong, ProvWeak, ProvGaps, ProvPolytope, ProvManual>;

struct GrowthConstants {
  GrowthKind kind = GrowthKind::Strong;
  double M = 0.0;        // curvature constant of the growth inequality; for the
                         // gaps kinds this is the strong-(M,0) companion
  double m = 0.0;        // gaps constant (Gaps / RelaxedGaps)
  double r = 0.0;        // exponent in [0, 1]
  double strong0_M = 0.0;  // strong-(M,0) companion carried by the weak kind
  Provenance provenance = ProvManual{};
};

std::string describe(const GrowthConstants& c);

// Closed-form constants of the stylized settings (unit lp-balls, quadratic
// distance objective). Parameter ranges are validated.
GrowthConstants strong_example_constants(double p, double lambda, int n);
GrowthConstants weak_example_constants(double p, int n);
GrowthConstants gaps_example_constants(double rho, int n);
GrowthConstants polytope_example_constants(double rho, double kappa, int n, int ell);

// m = rho/mu, M = 4 L, r = theta; lets tests exercise objective rescaling.
GrowthConstants gaps_constants_from(double L_cnorm, double mu_cnorm, double theta, double rho);

// 4 L ell (4 L mu / kappa)^{1/theta}: identification time upper bound.
double active_set_identification_bound(double L, double mu, double theta,
                                       double kappa, int ell);

// Smoothness w.r.t. the C-norm of an l2-smooth objective over the unit
// lp-ball: L for p <= 2, L n^{1/2 - 1/p} for p >= 2.
double lp_ball_cnorm_smoothness(double L2, double p, int n);

// Iteration thresholds after which the matching theorem bounds apply.
// Saturates at int64 max when the formula value exceeds it.
std::int64_t threshold_S(const GrowthConstants& constants, int ell);

enum class Theorem {
  SlowConv,        // primaldual_t <= eta_t M
  Strong1,         // primaldual, r = 1
  Strong1MinGap,   // min gap,    r = 1
  StrongR,         // primaldual, r in [0,1[
  StrongRMinGap,   // min gap,    r in [0,1[
  Weak,            // subopt
  WeakU,           // iteration bound U of the weak recurrence
  Gaps,            // subopt
  RelaxedGaps,     // subopt, polytope constants
  DistanceLemma,   // ||xbar_t - x_t||_C <= 2 eta_t^2 / eta_Q^2 (anchor.S = Q)
};

struct BoundAnchor {
  std::int64_t S = 1;        // threshold (or Q / R depending on the theorem)
  double value_at_S = 0.0;   // measured primaldual_S or subopt_S (subopt_R for WeakU)
};

// Exact evaluation of the theorem's right-hand side at iteration t, computed
// in the log domain; returns +inf when the linear-domain value overflows.
double bound_curve(Theorem theorem, const GrowthConstants& constants, int ell,
                   double epsilon, const BoundAnchor& anchor, std::int64_t t);

struct TelescopeResult {
  double product = 0.0;
  double bound = 0.0;
  bool holds = false;
};

// product = prod_{i=S}^{t} (1 - (1 - eps/ell) eta_i) against the bound
// (eta_t / eta_{S-1})^{ell-eps} exp(eps ell / S), both in the log domain.
TelescopeResult telescope_check(int ell, std::int64_t S, std::int64_t t, double epsilon);

struct GrowthEstimate {
  double estimate = 0.0;  // Mhat (strong/weak, max) or mhat (gaps, min)
  Vec worst_point;
  std::int64_t used = 0;
  std::int64_t skipped = 0;
};

// Empirical growth-constant certification on a 40/30/30 mix of uniform,
// boundary and FW-trajectory points. Points with gap < 1e-12 are skipped;
// the weak/gaps kinds additionally skip subopt below the reference slack.
GrowthEstimate certify_growth(GrowthKind kind, const Objective& obj,
                              const FeasibleRegion& region,
                              const ReferenceSolution& reference, double r,
                              std::int64_t samples, std::uint64_t seed, int eta_grid);

struct FaceDiagnostics {
  std::vector<std::int64_t> t;
  std::vector<char> in_optimal_face;   // LMO vertex at the snapshot lies in C*
  std::vector<double> distance_cnorm;  // ||xbar_t - x_t||_C
  std::int64_t Q_empirical = -1;       // first snapshot after which all LMO vertices lie in C*
};

// Snapshot-based diagnostics for the l1-ball polytope preset; C* is the
// simplex face spanned by +radius e_i over `face_support`.
FaceDiagnostics face_diagnostics(const IterateTrace& trace, const Objective& obj,
                                 const FeasibleRegion& region,
                                 const std::vector<int>& face_support,
                                 const Vec& x_star);

// l1 distance from x to the face conv{ radius e_i : i in support }.
double l1_face_distance(const Vec& x, const std::vector<int>& support, double radius);

}  // namespace fwlab
