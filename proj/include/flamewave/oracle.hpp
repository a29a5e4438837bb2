// Brute-force reference solvers used to pin golden values. They share no
// numerical code with the main solver: the field, the integrator, the root
// search and the integrals are all written out here with fixed-step RK4.

#ifndef FLAMEWAVE_ORACLE_HPP
#define FLAMEWAVE_ORACLE_HPP

#include <string>
#include <vector>

#include "flamewave/model.hpp"

namespace flamewave::oracle {

enum class Outcome {
  Undershoot,  // v' reached 0 with v > 0: c too small
  Overshoot,   // v reached 0 with v' < 0: c too large
  Budget       // neither within the step budget
};

struct ShotResult {
  Outcome outcome = Outcome::Budget;
  double defect = 0.0;  // distance from the origin at the stopping event
  double t_stop = 0.0;  // event time, an estimate of R near the true speed
  double J = 0.0;       // int_0^t_stop e^{-c xi} (-v') d xi (trapezoid)
  double K = 0.0;       // int_0^t_stop e^{-c xi} v d xi (trapezoid)
  long steps = 0;
};

/// Integrates Lambda v'' = c v' + v^alpha from v(0) = v0,
/// v'(0) = -(c/Lambda)(1 - v0) with fixed RK4 steps dt until v <= 0 or v' >= 0.
ShotResult shoot_time_domain(const PhysicalParams& p, double v0, double c, double dt,
                             long max_steps = 200000000);

struct OracleResult {
  std::string method;
  PhysicalParams params;
  double c = 0.0;
  double v0 = 0.0;
  double R = 0.0;
  double defect = 0.0;  // |shot defect| + |closure residual| at the result
  int iterations = 0;
  double cell_v0 = 0.0;  // final grid spacing (grid search only)
  double cell_c = 0.0;
};

/// Bisection on c using the undershoot/overshoot classification.
OracleResult shooting_speed(const PhysicalParams& p, double v0, double dt, double c_tol = 1e-13);

struct GridSearchOptions {
  int n = 41;
  int refinements = 2;
  double dt = 1e-3;
};

/// n x n grid over I x [c-(lo I), c+(hi I)]. In each v0 row the signed shot
/// defect changes sign across one c cell; c is polished there by bisection
/// and the combined defect |shot defect| + |closure residual| is minimized
/// over rows. Each refinement covers +-2 cells around the best point. The
/// closure residual is the lambda < 1 form for lambda < 1, the lambda > 1
/// form for lambda > 1, and 1 - theta - v0 for lambda = 1. n must be odd.
OracleResult grid_search_closure(const PhysicalParams& p, const GridSearchOptions& opt = {});

/// Best combined defect after each stage (index 0 is the coarse grid).
struct GridTrace {
  std::vector<double> stage_defect;
};
OracleResult grid_search_closure(const PhysicalParams& p, const GridSearchOptions& opt,
                                 GridTrace* trace);

}  // namespace flamewave::oracle

#endif  // FLAMEWAVE_ORACLE_HPP
