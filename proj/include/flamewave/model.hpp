// Domain types, the planar vector fields and the closed-form curves used
// throughout the traveling-wave solver.
//
// The scalar problem for the reactant concentration v on [0, R] is
//
//   Lambda v'' - c v' = v^alpha,  v(0) = v0, v'(0) = -(c/Lambda)(1 - v0),
//   v(R) = v'(R) = 0,
//
// and with t = xi, x = v, y = v' it becomes the autonomous planar system
// X_c(x, y) = (y, (c y + x^alpha) / Lambda) on the quadrant x >= 0, y <= 0.

#ifndef FLAMEWAVE_MODEL_HPP
#define FLAMEWAVE_MODEL_HPP

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace flamewave {

/// Raised for precondition violations (bad parameters, points outside the
/// quadrant, out-of-range queries).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative solver fails (no sign change, iteration cap,
/// step-size underflow).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reaction order alpha, inverse Lewis number lambda, ignition temperature
/// theta. The main solver path needs 0 < alpha < 1, lambda > 0 and
/// 0 < theta < 1; the limit cases relax the first two.
struct PhysicalParams {
  double alpha = 0.5;
  double lambda = 1.0;
  double theta = 0.5;
};

/// Throws DomainError unless 0 < alpha < 1, lambda > 0, 0 < theta < 1.
void validate_main(const PhysicalParams& p);

struct SolverConfig {
  double ode_rel_tol = 1e-11;
  double ode_abs_tol = 1e-14;
  /// Upper bound on the abscissa where the analytic tail hands off to
  /// numerical integration. The series accuracy may push the hand-off lower.
  double seed_x = 1e-8;
  double c_bisect_tol = 1e-13;
  double v0_bisect_tol = 1e-10;
  double quad_tol = 1e-12;
  int max_iter = 200;
  int grid_points = 2048;
  bool picard = false;
};

void validate(const SolverConfig& cfg);

/// A point (x, y) = (v, v') of the phase plane.
struct PhaseState {
  double x = 0.0;
  double y = 0.0;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] bool contains(double v) const { return lo <= v && v <= hi; }
  [[nodiscard]] bool contains_strictly(double v) const { return lo < v && v < hi; }
  [[nodiscard]] bool degenerate() const { return lo == hi; }
};

/// X_c on the quadrant: (y, (c y + x^alpha) / lambda).
PhaseState field_xc(const PhysicalParams& p, double c, PhaseState s);

/// Odd extension of X_c to the whole plane, with sign(0) = 0.
PhaseState field_extended(const PhysicalParams& p, double c, PhaseState s);

/// (2 / ((1 + alpha) lambda))^{1/2}: the constant of the c = 0 manifold.
double l0_coefficient(const PhysicalParams& p);

/// Stable manifold of the Hamiltonian field X_0:
/// y0(x) = -(2/((1+alpha) lambda))^{1/2} x^{(1+alpha)/2}.
double curve_l0(const PhysicalParams& p, double x);

/// Transversal control curve l_c: y0(x) + (c / lambda) x.
double curve_lc(const PhysicalParams& p, double c, double x);

/// Abscissa where l_c crosses y = 0; +infinity at c = 0.
double lc_axis_crossing(const PhysicalParams& p, double c);

/// c-(v0): lower bound for the speed.
double c_lower(const PhysicalParams& p, double v0);
/// Energy upper bound c+(v0).
double c_upper_energy(const PhysicalParams& p, double v0);
/// Upper bound from the curve -x^alpha / c: (lambda/(1-v0))^{1/2} v0^{alpha/2}.
double c_upper_lower_curve(const PhysicalParams& p, double v0);

/// [c-(v0), min(c+(v0), (lambda/(1-v0))^{1/2} v0^{alpha/2})].
Bracket c_brackets(const PhysicalParams& p, double v0);

/// Settling-time lower bound ((2(1+alpha) lambda)^{1/2} / (1-alpha)) x^{(1-alpha)/2};
/// exact on the c = 0 manifold.
double settling_lower_bound(const PhysicalParams& p, double x);

/// Upper bound for T(x, c), valid for x < lc_axis_crossing(c).
double settling_upper_bound(const PhysicalParams& p, double c, double x);

/// A(alpha) = 2^{3/2} / (1 + alpha)^{1/2}.
double a_factor(double alpha);

/// Two-sided bounds on R(v0) valid for 0 < v0 < 1.
Bracket r_bounds(const PhysicalParams& p, double v0);

/// Interval that contains v0* for the fixed-point closure. For lambda = 1
/// the interval collapses to the point 1 - theta.
Bracket interval_i(const PhysicalParams& p);

/// Projection of the real line onto a closed interval.
double project(const Bracket& b, double v);

/// Human-readable "alpha=..., lambda=..., theta=..." tag for messages.
std::string describe(const PhysicalParams& p);

}  // namespace flamewave

#endif  // FLAMEWAVE_MODEL_HPP
