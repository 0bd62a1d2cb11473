#pragma once

#include "fwlab/geometry.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace fwlab {

// f(x) = 1/2 ||x - y||_2^2
struct QuadraticDistance {
  Vec y;
};

// f(x) = 1/2 ||Ax - y||_2^2
struct LeastSquares {
  Mat A;
  Vec y;
};

// f(x) = (1/m) sum_i log(1 + exp(-b_i <a_i, x>)), labels b_i in {-1, +1}
struct Logistic {
  Mat features;  // m x n
  Vec labels;
};

// f(X) = (1/|I|) sum_{(i,j,a) in I} H_rho(a - X_ij), X flattened row-major
struct HuberCompletion {
  std::vector<std::tuple<int, int, double>> observed;
  double rho;
  int rows, cols;
};

using ObjectiveKind = std::variant<QuadraticDistance, LeastSquares, Logistic, HuberCompletion>;

struct Objective {
  ObjectiveKind kind;
  double declared_L;  // smoothness w.r.t. l2; factory default if not supplied
};

Objective make_quadratic_distance(Vec y, std::optional<double> L = std::nullopt);
Objective make_least_squares(Mat A, Vec y, std::optional<double> L = std::nullopt);
Objective make_logistic(Mat features, Vec labels, std::optional<double> L = std::nullopt);
Objective make_huber_completion(std::vector<std::tuple<int, int, double>> observed,
                                double rho, int rows, int cols,
                                std::optional<double> L = std::nullopt);

int objective_dim(const Objective& obj);

std::pair<double, Vec> value_and_grad(const Objective& obj, const Vec& x);
double objective_value(const Objective& obj, const Vec& x);

// D_f(y, x) = f(y) - f(x) - <grad f(x), y - x>
double bregman(const Objective& obj, const Vec& y_pt, const Vec& x);

struct ReferenceSolution {
  double f_ref = 0.0;       // best objective value found
  double lower_bound = 0.0; // certified: f* >= lower_bound
  Vec x_ref;
  std::string method;
};

// Closed forms where available (quadratic distance over lp-balls), otherwise
// FW with exact line search for `budget` iterations. If the duality gap at
// exit exceeds `tol`, method is "budgeted" and the caller decides.
ReferenceSolution reference_solution(const Objective& obj, const FeasibleRegion& region,
                                     std::int64_t budget, double tol = 1e-10);

// Projection of y onto the lp-ball (KKT bisection for general p).
Vec project_lp_ball(const Vec& y, double p, double radius);

}  // namespace fwlab
