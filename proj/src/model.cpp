#include "flamewave/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flamewave {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

double sign_of(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

}  // namespace

void validate_main(const PhysicalParams& p) {
  require(std::isfinite(p.alpha) && p.alpha > 0.0 && p.alpha < 1.0,
          "alpha must satisfy 0 < alpha < 1");
  require(std::isfinite(p.lambda) && p.lambda > 0.0, "lambda must be positive");
  require(std::isfinite(p.theta) && p.theta > 0.0 && p.theta < 1.0,
          "theta must satisfy 0 < theta < 1");
}

void validate(const SolverConfig& cfg) {
  require(cfg.ode_rel_tol > 0.0 && cfg.ode_abs_tol > 0.0, "ODE tolerances must be positive");
  require(cfg.seed_x > 0.0, "seed_x must be positive");
  require(cfg.c_bisect_tol > 0.0 && cfg.v0_bisect_tol > 0.0, "root tolerances must be positive");
  require(cfg.quad_tol > 0.0, "quad_tol must be positive");
  require(cfg.max_iter > 0, "max_iter must be positive");
  require(cfg.grid_points >= 16, "grid must have at least 16 points");
}

PhaseState field_xc(const PhysicalParams& p, double c, PhaseState s) {
  if (!(s.x >= 0.0)) throw DomainError("field_xc: x must be non-negative");
  return {s.y, (c * s.y + std::pow(s.x, p.alpha)) / p.lambda};
}

PhaseState field_extended(const PhysicalParams& p, double c, PhaseState s) {
  const double source = sign_of(s.x) * std::pow(std::abs(s.x), p.alpha);
  return {s.y, (c * s.y + source) / p.lambda};
}

double l0_coefficient(const PhysicalParams& p) {
  return std::sqrt(2.0 / ((1.0 + p.alpha) * p.lambda));
}

double curve_l0(const PhysicalParams& p, double x) {
  if (!(x >= 0.0)) throw DomainError("curve_l0: x must be non-negative");
  return -l0_coefficient(p) * std::pow(x, 0.5 * (1.0 + p.alpha));
}

double curve_lc(const PhysicalParams& p, double c, double x) {
  return curve_l0(p, x) + (c / p.lambda) * x;
}

double lc_axis_crossing(const PhysicalParams& p, double c) {
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(2.0 * p.lambda / ((1.0 + p.alpha) * c * c), 1.0 / (1.0 - p.alpha));
}

double c_lower(const PhysicalParams& p, double v0) {
  return std::sqrt(2.0 * p.lambda / (1.0 + p.alpha)) * std::pow(v0, 0.5 * (1.0 + p.alpha));
}

double c_upper_energy(const PhysicalParams& p, double v0) { return c_lower(p, v0) / (1.0 - v0); }

double c_upper_lower_curve(const PhysicalParams& p, double v0) {
  return std::sqrt(p.lambda / (1.0 - v0)) * std::pow(v0, 0.5 * p.alpha);
}

Bracket c_brackets(const PhysicalParams& p, double v0) {
  if (!(v0 > 0.0 && v0 < 1.0)) throw DomainError("c_brackets: v0 must lie in (0, 1)");
  return {c_lower(p, v0), std::min(c_upper_energy(p, v0), c_upper_lower_curve(p, v0))};
}

double settling_lower_bound(const PhysicalParams& p, double x) {
  const double k = std::sqrt(2.0 * (1.0 + p.alpha) * p.lambda) / (1.0 - p.alpha);
  return k * std::pow(x, 0.5 * (1.0 - p.alpha));
}

double settling_upper_bound(const PhysicalParams& p, double c, double x) {
  const double shrink =
      1.0 - c * std::sqrt((1.0 + p.alpha) / (2.0 * p.lambda)) * std::pow(x, 0.5 * (1.0 - p.alpha));
  if (shrink <= 0.0) return std::numeric_limits<double>::infinity();
  return settling_lower_bound(p, x) / shrink;
}

double a_factor(double alpha) { return std::pow(2.0, 1.5) / std::sqrt(1.0 + alpha); }

Bracket r_bounds(const PhysicalParams& p, double v0) {
  const double m = 0.5 * (1.0 - p.alpha);
  const double upper = 2.0 * std::sqrt(p.lambda) * a_factor(p.alpha) / (1.0 - p.alpha) *
                       std::pow(v0, m) / (1.0 - v0);
  return {settling_lower_bound(p, v0), upper};
}

Bracket interval_i(const PhysicalParams& p) {
  const double th = p.theta;
  const double la = p.lambda;
  if (la < 1.0) return {1.0 - th, 1.0 - la * th};
  if (la > 1.0) return {(1.0 - th) / la, 1.0 - th / la};
  return {1.0 - th, 1.0 - th};
}

double project(const Bracket& b, double v) { return std::clamp(v, b.lo, b.hi); }

std::string describe(const PhysicalParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << p.alpha << ", lambda=" << p.lambda << ", theta=" << p.theta;
  return os.str();
}

}  // namespace flamewave
