#include "flamewave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace flamewave::oracle {

namespace {

struct Vec {
  double x, y;
};

Vec field(const PhysicalParams& p, double c, Vec s) {
  const double src = s.x > 0.0 ? std::pow(s.x, p.alpha) : (s.x < 0.0 ? -std::pow(-s.x, p.alpha) : 0.0);
  return {s.y, (c * s.y + src) / p.lambda};
}

Vec rk4(const PhysicalParams& p, double c, Vec s, double h) {
  const Vec k1 = field(p, c, s);
  const Vec k2 = field(p, c, {s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y});
  const Vec k3 = field(p, c, {s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y});
  const Vec k4 = field(p, c, {s.x + h * k3.x, s.y + h * k3.y});
  return {s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
}

double c_minus(const PhysicalParams& p, double v0) {
  return std::sqrt(2.0 * p.lambda / (1.0 + p.alpha)) * std::pow(v0, 0.5 * (1.0 + p.alpha));
}

double c_plus(const PhysicalParams& p, double v0) {
  return std::min(c_minus(p, v0) / (1.0 - v0),
                  std::sqrt(p.lambda / (1.0 - v0)) * std::pow(v0, 0.5 * p.alpha));
}

// Signed shot defect (positive for undershoot) and closure residual.
struct Node {
  double D = std::numeric_limits<double>::quiet_NaN();
  double G = std::numeric_limits<double>::quiet_NaN();
  double t = 0.0;
};

double closure_residual(const PhysicalParams& p, double v0, double c, const ShotResult& s) {
  if (p.lambda == 1.0) return 1.0 - p.theta - v0;
  if (p.lambda < 1.0) return 1.0 - p.theta + (1.0 - p.lambda) * s.J - v0;
  return (1.0 - p.theta - c * (1.0 - p.lambda) * s.K) / p.lambda - v0;
}

}  // namespace

ShotResult shoot_time_domain(const PhysicalParams& p, double v0, double c, double dt,
                             long max_steps) {
  if (!(dt > 0.0)) throw DomainError("shoot_time_domain: dt must be positive");
  if (!(v0 > 0.0 && v0 < 1.0)) throw DomainError("shoot_time_domain: v0 must lie in (0, 1)");
  ShotResult r;
  Vec s{v0, -(c / p.lambda) * (1.0 - v0)};
  double t = 0.0;
  double wj = -s.y;  // integrand values at the left end of the current step
  double wk = s.x;
  for (long n = 0; n < max_steps; ++n) {
    const Vec q = rk4(p, c, s, dt);
    const double tq = (n + 1) * dt;
    const double e = std::exp(-c * tq);
    if (q.y >= 0.0 && q.x > 0.0) {
      const double f = s.y / (s.y - q.y);  // fraction of the step to y = 0
      const double xe = s.x + f * (q.x - s.x);
      r.outcome = Outcome::Undershoot;
      r.defect = xe;
      r.t_stop = t + f * dt;
      r.J += 0.5 * f * dt * wj;
      r.K += 0.5 * f * dt * (wk + std::exp(-c * r.t_stop) * xe);
      r.steps = n + 1;
      return r;
    }
    if (q.x <= 0.0) {
      const double f = s.x / (s.x - q.x);
      const double ye = s.y + f * (q.y - s.y);
      r.outcome = Outcome::Overshoot;
      r.defect = std::abs(ye);
      r.t_stop = t + f * dt;
      r.J += 0.5 * f * dt * (wj + std::exp(-c * r.t_stop) * (-ye));
      r.K += 0.5 * f * dt * wk;
      r.steps = n + 1;
      return r;
    }
    r.J += 0.5 * dt * (wj + e * (-q.y));
    r.K += 0.5 * dt * (wk + e * q.x);
    wj = e * (-q.y);
    wk = e * q.x;
    s = q;
    t = tq;
  }
  r.outcome = Outcome::Budget;
  r.defect = std::hypot(s.x, s.y);
  r.t_stop = t;
  r.steps = max_steps;
  return r;
}

OracleResult shooting_speed(const PhysicalParams& p, double v0, double dt, double c_tol) {
  double lo = c_minus(p, v0);
  double hi = c_plus(p, v0);
  // Widen until the ends classify as expected.
  for (int k = 0; shoot_time_domain(p, v0, lo, dt).outcome != Outcome::Undershoot; ++k) {
    if (k > 60) throw SolverError("shooting_speed: no undershoot found");
    lo *= 0.5;
  }
  for (int k = 0; shoot_time_domain(p, v0, hi, dt).outcome != Outcome::Overshoot; ++k) {
    if (k > 60) throw SolverError("shooting_speed: no overshoot found");
    hi *= 2.0;
  }
  OracleResult out;
  out.method = "rk4-shooting";
  out.params = p;
  out.v0 = v0;
  int it = 0;
  while (hi - lo > c_tol * hi && it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const ShotResult s = shoot_time_domain(p, v0, mid, dt);
    if (s.outcome == Outcome::Undershoot) lo = mid;
    else if (s.outcome == Outcome::Overshoot) hi = mid;
    else break;
    ++it;
  }
  out.c = 0.5 * (lo + hi);
  const ShotResult s = shoot_time_domain(p, v0, out.c, dt);
  out.R = s.t_stop;
  out.defect = s.defect;
  out.iterations = it;
  return out;
}

OracleResult grid_search_closure(const PhysicalParams& p, const GridSearchOptions& opt) {
  return grid_search_closure(p, opt, nullptr);
}

OracleResult grid_search_closure(const PhysicalParams& p, const GridSearchOptions& opt,
                                 GridTrace* trace) {
  if (opt.n < 5 || opt.n % 2 == 0) throw DomainError("grid_search_closure: n must be odd and >= 5");
  double v_lo, v_hi;
  if (p.lambda < 1.0) {
    v_lo = 1.0 - p.theta;
    v_hi = 1.0 - p.lambda * p.theta;
  } else if (p.lambda > 1.0) {
    v_lo = (1.0 - p.theta) / p.lambda;
    v_hi = 1.0 - p.theta / p.lambda;
  } else {
    v_lo = v_hi = 1.0 - p.theta;
  }
  double c_lo = c_minus(p, v_lo);
  double c_hi = c_plus(p, v_hi);
  const int n = opt.n;
  std::vector<Node> row(static_cast<std::size_t>(n));

  OracleResult best;
  best.method = "rk4-grid-search";
  best.params = p;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int stage = 0; stage <= opt.refinements; ++stage) {
    const double dv = (v_hi - v_lo) / (n - 1);
    const double dc = (c_hi - c_lo) / (n - 1);
    double stage_cost = std::numeric_limits<double>::infinity();
    OracleResult stage_best = best;
    for (int i = 0; i < n; ++i) {
      const double v0 = v_lo + i * dv;
      if (!(v0 > 0.0 && v0 < 1.0)) continue;
      for (int j = 0; j < n; ++j) {
        const double c = c_lo + j * dc;
        row[j] = Node{};
        if (!(c > 0.0)) continue;
        const ShotResult s = shoot_time_domain(p, v0, c, opt.dt);
        if (s.outcome == Outcome::Budget) continue;
        row[j].D = s.outcome == Outcome::Undershoot ? s.defect : -s.defect;
        row[j].G = closure_residual(p, v0, c, s);
        row[j].t = s.t_stop;
      }
      // The forward shot is unstable, so off the speed valley both defects
      // saturate. Polish c inside the row's sign-change cell instead.
      int j0 = -1;
      for (int j = 0; j + 1 < n; ++j) {
        if (std::isfinite(row[j].D) && std::isfinite(row[j + 1].D) && row[j].D > 0.0 &&
            row[j + 1].D <= 0.0) {
          j0 = j;
          break;
        }
      }
      if (j0 < 0) continue;
      double lo = c_lo + j0 * dc;
      double hi = c_lo + (j0 + 1) * dc;
      for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const ShotResult s = shoot_time_domain(p, v0, mid, opt.dt);
        if (s.outcome == Outcome::Undershoot) lo = mid;
        else if (s.outcome == Outcome::Overshoot) hi = mid;
        else break;
      }
      const double c = 0.5 * (lo + hi);
      const ShotResult s = shoot_time_domain(p, v0, c, opt.dt);
      const double cost = s.defect + std::abs(closure_residual(p, v0, c, s));
      if (cost < stage_cost) {
        stage_cost = cost;
        stage_best.v0 = v0;
        stage_best.c = c;
        stage_best.R = s.t_stop;
        stage_best.defect = cost;
      }
    }
    if (!std::isfinite(stage_cost)) {
      if (stage == 0) throw SolverError("grid_search_closure: speed valley not found on the grid");
    } else if (stage_cost <= best_cost) {
      best = stage_best;
      best_cost = stage_cost;
    }
    best.cell_v0 = dv;
    best.cell_c = dc;
    best.iterations = stage + 1;
    if (trace) trace->stage_defect.push_back(best_cost);
    v_lo = best.v0 - 2.0 * dv;
    v_hi = best.v0 + 2.0 * dv;
    c_lo = best.c - 2.0 * dc;
    c_hi = best.c + 2.0 * dc;
  }
  return best;
}

}  // namespace flamewave::oracle
