// Stable manifold y_c(x) of X_c in the quadrant.
//
// Near the origin the manifold behaves like -k x^{(1+alpha)/2}, so a
// direct integration in x has an unbounded slope at the start. We use the
// reduced coordinates
//
//   s = x^m,  y = x^p Y(s),   p = (1+alpha)/2,  m = (1-alpha)/2,
//
// in which the graph equation Lambda y y' = c y + x^alpha becomes
//
//   Lambda m s Y Y' = c s Y + Lambda p (d0^2 - Y^2),   d0 = -1/sqrt(Lambda p),
//
// regular in s with Y(0) = d0. Y has a convergent power series at s = 0
// (TailSeries), used on [0, seed] and to start the numerical integration.
// The settling time T satisfies dT/ds = 1/(m |Y|), which is smooth as well,
// and is carried as a second component.

#ifndef FLAMEWAVE_MANIFOLD_HPP
#define FLAMEWAVE_MANIFOLD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "flamewave/model.hpp"
#include "flamewave/numerics/dopri5.hpp"

namespace flamewave {

/// Power series of the reduced manifold Y(s) = sum d_n s^n and of
/// 1/|Y(s)| = sum r_n s^n around s = 0.
class TailSeries {
 public:
  TailSeries() = default;
  TailSeries(const PhysicalParams& p, double c, int terms = 48);

  [[nodiscard]] double value(double s) const;
  /// Y(s) - d0, summed without the leading term.
  [[nodiscard]] double deviation(double s) const;
  [[nodiscard]] double slope(double s) const;
  /// (1/m) * integral_0^s ds' / |Y(s')|.
  [[nodiscard]] double settling(double s) const;
  /// Largest s for which the omitted terms stay below rel_tol |d0|.
  [[nodiscard]] double accurate_up_to(double rel_tol) const;

  [[nodiscard]] double leading() const { return y_coef_.front(); }
  [[nodiscard]] const std::vector<double>& coefficients() const { return y_coef_; }

 private:
  double m_ = 0.0;
  std::vector<double> y_coef_;
  std::vector<double> inv_coef_;
};

/// Point on the manifold in both coordinate systems.
struct ReducedPoint {
  double s = 0.0;    // x^m
  double x = 0.0;    // v
  double y = 0.0;    // v'
  double Y = 0.0;    // y / x^p
  double tau = 0.0;  // settling time from (x, y) to the origin
};

class ManifoldCurve {
 public:
  ManifoldCurve(PhysicalParams params, double c, TailSeries tail, double seed_s,
                numerics::Trajectory<2> trajectory);

  [[nodiscard]] const PhysicalParams& params() const { return params_; }
  [[nodiscard]] double c() const { return c_; }
  [[nodiscard]] double p_exponent() const { return p_; }
  [[nodiscard]] double m_exponent() const { return m_; }
  [[nodiscard]] double seed_s() const { return seed_s_; }
  [[nodiscard]] double seed_x() const { return x_of_s(seed_s_); }
  [[nodiscard]] double s_max() const { return s_max_; }
  [[nodiscard]] double x_max() const { return x_of_s(s_max_); }
  /// (2/((1+alpha) lambda))^{1/2}, the L0 tail constant.
  [[nodiscard]] double tail_coefficient() const { return -tail_.leading(); }
  [[nodiscard]] const TailSeries& tail() const { return tail_; }
  [[nodiscard]] const numerics::Trajectory<2>& trajectory() const { return traj_; }

  [[nodiscard]] double s_of_x(double x) const;
  [[nodiscard]] double x_of_s(double s) const;

  /// Reduced value Y(s) for 0 <= s <= s_max.
  [[nodiscard]] double reduced(double s) const;
  /// Y(s) - d0, computed without cancellation inside the series region.
  [[nodiscard]] double reduced_deviation(double s) const;
  /// Settling time carried by the integration (series tail + ODE).
  [[nodiscard]] double settling_carried(double s) const;
  [[nodiscard]] ReducedPoint point(double s) const;

  /// Sampled (x, y) pairs at the accepted integration steps, x increasing.
  [[nodiscard]] std::vector<PhaseState> samples() const;

 private:
  PhysicalParams params_;
  double c_;
  double p_;
  double m_;
  TailSeries tail_;
  double seed_s_;
  double s_max_;
  numerics::Trajectory<2> traj_;
};

using ManifoldPtr = std::shared_ptr<const ManifoldCurve>;

/// Midpoint of the proven envelope [L0(eps), l_c(eps)]:
/// (eps, L0(eps) + (c / (2 lambda)) eps).
PhaseState manifold_seed(const PhysicalParams& p, double c, double eps);

struct GrowOptions {
  /// Start from this point instead of the series value at the hand-off.
  std::optional<PhaseState> seed;
  /// Initial step for the integrator (warm start); 0 for automatic.
  double h_init = 0.0;
};

/// Integrates the manifold from the hand-off point up to x_max.
ManifoldCurve grow_manifold(const PhysicalParams& p, double c, double x_max,
                            const SolverConfig& cfg, const GrowOptions& opt = {});

/// y_c(x) for 0 <= x <= x_max; exactly 0 at x = 0.
double eval_manifold(const ManifoldCurve& m, double x);

/// Integral over s in [s_a, s_b] of f(point(s)), split at the hand-off and
/// at every integration step so each piece has a smooth integrand.
double integrate_along(const ManifoldCurve& m, double s_a, double s_b,
                       const std::function<double(const ReducedPoint&)>& f, double rel_tol,
                       double* error_estimate = nullptr);

struct PortraitPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};
using Polyline = std::vector<PortraitPoint>;

struct PortraitOptions {
  double box = 2.0;       // |x|, |y| <= box
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
};

/// Trajectories of the extended field through each seed over [-t_span, t_span],
/// truncated when they leave the box. Points are ordered by increasing t.
std::vector<Polyline> sample_phase_portrait(const PhysicalParams& p, double c,
                                            const std::vector<PhaseState>& seeds,
                                            double t_span, const PortraitOptions& opt = {});

}  // namespace flamewave

#endif  // FLAMEWAVE_MANIFOLD_HPP
