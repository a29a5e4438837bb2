#include "flamewave/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flamewave/numerics/quadrature.hpp"

namespace flamewave {

namespace {

constexpr double kSeriesRelTol = 1e-16;

}  // namespace

TailSeries::TailSeries(const PhysicalParams& p, double c, int terms) {
  const double pe = 0.5 * (1.0 + p.alpha);
  m_ = 0.5 * (1.0 - p.alpha);
  const double la = p.lambda;
  y_coef_.assign(static_cast<std::size_t>(terms), 0.0);
  inv_coef_.assign(static_cast<std::size_t>(terms), 0.0);
  const double d0 = -1.0 / std::sqrt(la * pe);
  y_coef_[0] = d0;
  for (int n = 1; n < terms; ++n) {
    double conv = 0.0;
    for (int j = 1; j < n; ++j) conv += y_coef_[j] * y_coef_[n - j];
    y_coef_[n] = (c * y_coef_[n - 1] / (la * (pe + 0.5 * m_ * n)) - conv) / (2.0 * d0);
  }
  // 1/Y by series reciprocal, then flip the sign for 1/|Y| (Y < 0).
  std::vector<double> q(static_cast<std::size_t>(terms), 0.0);
  q[0] = 1.0 / d0;
  for (int n = 1; n < terms; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += y_coef_[j] * q[n - j];
    q[n] = -acc / d0;
  }
  for (int n = 0; n < terms; ++n) inv_coef_[n] = -q[n];
}

double TailSeries::value(double s) const {
  double acc = 0.0;
  for (auto it = y_coef_.rbegin(); it != y_coef_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double TailSeries::deviation(double s) const {
  double acc = 0.0;
  for (std::size_t n = y_coef_.size() - 1; n >= 1; --n) acc = acc * s + y_coef_[n];
  return acc * s;
}

double TailSeries::slope(double s) const {
  double acc = 0.0;
  for (std::size_t n = y_coef_.size() - 1; n >= 1; --n) acc = acc * s + n * y_coef_[n];
  return acc;
}

double TailSeries::settling(double s) const {
  double acc = 0.0;
  for (std::size_t n = inv_coef_.size(); n-- > 0;)
    acc = acc * s + inv_coef_[n] / static_cast<double>(n + 1);
  return acc * s / m_;
}

double TailSeries::accurate_up_to(double rel_tol) const {
  double bound = std::numeric_limits<double>::infinity();
  const std::size_t n_terms = y_coef_.size();
  for (std::size_t n = n_terms - 4; n < n_terms; ++n) {
    const double dn = std::abs(y_coef_[n]);
    const double rn = std::abs(inv_coef_[n]);
    if (dn > 0.0)
      bound = std::min(bound, std::pow(rel_tol * std::abs(y_coef_[0]) / dn, 1.0 / n));
    if (rn > 0.0)
      bound = std::min(bound, std::pow(rel_tol * std::abs(inv_coef_[0]) / rn, 1.0 / n));
  }
  return bound;
}

ManifoldCurve::ManifoldCurve(PhysicalParams params, double c, TailSeries tail, double seed_s,
                             numerics::Trajectory<2> trajectory)
    : params_(params),
      c_(c),
      p_(0.5 * (1.0 + params.alpha)),
      m_(0.5 * (1.0 - params.alpha)),
      tail_(std::move(tail)),
      seed_s_(seed_s),
      s_max_(trajectory.empty() ? seed_s : trajectory.t_end()),
      traj_(std::move(trajectory)) {}

double ManifoldCurve::s_of_x(double x) const { return std::pow(x, m_); }

double ManifoldCurve::x_of_s(double s) const { return std::pow(s, 1.0 / m_); }

double ManifoldCurve::reduced(double s) const { return tail_.leading() + reduced_deviation(s); }

double ManifoldCurve::reduced_deviation(double s) const {
  if (!(s >= 0.0) || s > s_max_ * (1.0 + 1e-14))
    throw DomainError("manifold: abscissa outside the grown range");
  if (s <= seed_s_ || traj_.empty()) return tail_.deviation(s);
  return traj_.eval(std::min(s, s_max_))[0];
}

double ManifoldCurve::settling_carried(double s) const {
  if (!(s >= 0.0) || s > s_max_ * (1.0 + 1e-14))
    throw DomainError("manifold: abscissa outside the grown range");
  if (s <= seed_s_ || traj_.empty()) return tail_.settling(s);
  return traj_.eval(std::min(s, s_max_))[1];
}

ReducedPoint ManifoldCurve::point(double s) const {
  ReducedPoint pt;
  pt.s = s;
  if (s <= seed_s_ || traj_.empty()) {
    pt.Y = tail_.value(s);
    pt.tau = tail_.settling(s);
  } else {
    const auto z = traj_.eval(std::min(s, s_max_));
    pt.Y = tail_.leading() + z[0];
    pt.tau = z[1];
  }
  pt.x = x_of_s(s);
  pt.y = std::pow(pt.x, p_) * pt.Y;
  return pt;
}

std::vector<PhaseState> ManifoldCurve::samples() const {
  std::vector<PhaseState> out;
  out.reserve(traj_.steps.size() + 1);
  const double d0 = tail_.leading();
  auto push = [&](double s, double dev) {
    const double x = x_of_s(s);
    out.push_back({x, std::pow(x, p_) * (d0 + dev)});
  };
  if (traj_.empty()) return out;
  push(traj_.steps.front().t0, traj_.steps.front().start()[0]);
  for (const auto& st : traj_.steps) push(st.t1(), st.end()[0]);
  return out;
}

PhaseState manifold_seed(const PhysicalParams& p, double c, double eps) {
  if (!(eps > 0.0)) throw DomainError("manifold_seed: eps must be positive");
  if (c < 0.0) throw DomainError("manifold_seed: c must be non-negative");
  return {eps, curve_l0(p, eps) + (c / (2.0 * p.lambda)) * eps};
}

ManifoldCurve grow_manifold(const PhysicalParams& p, double c, double x_max,
                            const SolverConfig& cfg, const GrowOptions& opt) {
  validate_main(p);
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("grow_manifold: c must be >= 0");
  if (!(x_max > 0.0) || !std::isfinite(x_max))
    throw DomainError("grow_manifold: x_max must be positive");

  const double pe = 0.5 * (1.0 + p.alpha);
  const double m = 0.5 * (1.0 - p.alpha);
  const double la = p.lambda;
  TailSeries tail(p, c);
  const double d0 = tail.leading();
  const double s_max = std::pow(x_max, m);

  double seed_s;
  double dev0;
  if (opt.seed) {
    if (!(opt.seed->x > 0.0 && opt.seed->x < x_max && opt.seed->y < 0.0))
      throw DomainError("grow_manifold: custom seed must lie in the open quadrant below x_max");
    seed_s = std::pow(opt.seed->x, m);
    dev0 = opt.seed->y / std::pow(opt.seed->x, pe) - d0;
  } else {
    const double cap = std::pow(cfg.seed_x * std::max(1.0, x_max), m);
    seed_s = std::min({cap, tail.accurate_up_to(kSeriesRelTol), 0.5 * s_max});
    dev0 = tail.deviation(seed_s);
  }
  const double tau0 = tail.settling(seed_s);

  // State (D, T) with Y = d0 + D.
  auto rhs = [&](double s, const numerics::State<2>& z) -> numerics::State<2> {
    const double dev = z[0];
    const double Y = d0 + dev;
    if (!(Y < 0.0)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return {nan, nan};
    }
    const double num = c * s * Y - la * pe * dev * (2.0 * d0 + dev);
    return {num / (la * m * s * Y), -1.0 / (m * Y)};
  };

  numerics::Dopri5Options o;
  o.rtol = cfg.ode_rel_tol;
  o.atol = cfg.ode_abs_tol;
  o.h_init = opt.h_init;
  auto res = numerics::integrate<2>(rhs, seed_s, {dev0, tau0}, s_max, o);
  for (const auto& st : res.trajectory.steps) {
    if (!(d0 + st.end()[0] < 0.0))
      throw SolverError("grow_manifold: manifold reached y = 0 (tolerance too loose?)");
  }
  return ManifoldCurve(p, c, std::move(tail), seed_s, std::move(res.trajectory));
}

double eval_manifold(const ManifoldCurve& m, double x) {
  if (!(x >= 0.0) || x > m.x_max() * (1.0 + 1e-12))
    throw DomainError("eval_manifold: x outside [0, x_max]");
  if (x == 0.0) return 0.0;
  const double s = std::min(m.s_of_x(x), m.s_max());
  return std::pow(x, m.p_exponent()) * m.reduced(s);
}

double integrate_along(const ManifoldCurve& m, double s_a, double s_b,
                       const std::function<double(const ReducedPoint&)>& f, double rel_tol,
                       double* error_estimate) {
  if (s_b < s_a) {
    return -integrate_along(m, s_b, s_a, f, rel_tol, error_estimate);
  }
  std::vector<double> cuts{s_a};
  if (m.seed_s() > s_a && m.seed_s() < s_b) cuts.push_back(m.seed_s());
  for (const auto& st : m.trajectory().steps) {
    const double b = st.t1();
    if (b > s_a && b < s_b) cuts.push_back(b);
  }
  cuts.push_back(s_b);
  std::sort(cuts.begin(), cuts.end());

  auto g = [&](double s) { return f(m.point(s)); };
  double total = 0.0;
  double err_total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    double err = 0.0;
    total += numerics::integrate_gk15(g, cuts[i], cuts[i + 1], rel_tol, 12, &err);
    err_total += err;
  }
  if (error_estimate) *error_estimate = err_total;
  return total;
}

std::vector<Polyline> sample_phase_portrait(const PhysicalParams& p, double c,
                                            const std::vector<PhaseState>& seeds,
                                            double t_span, const PortraitOptions& opt) {
  std::vector<Polyline> out;
  out.reserve(seeds.size());
  auto inside = [&](double x, double y) {
    return std::abs(x) <= opt.box && std::abs(y) <= opt.box;
  };
  auto rhs = [&](double, const numerics::State<2>& z) -> numerics::State<2> {
    const auto d = field_extended(p, c, {z[0], z[1]});
    return {d.x, d.y};
  };
  numerics::Dopri5Options o;
  o.rtol = opt.rel_tol;
  o.atol = opt.abs_tol;
  o.max_steps = 1000000;

  for (const auto& seed : seeds) {
    Polyline line;
    if (!std::isfinite(seed.x) || !std::isfinite(seed.y) || !inside(seed.x, seed.y)) {
      out.push_back(std::move(line));
      continue;
    }
    auto run = [&](double t_end) {
      Polyline branch;
      auto observer = [&](const numerics::DenseStep<2>& st) {
        const auto z = st.end();
        if (!inside(z[0], z[1])) return false;
        branch.push_back({st.t1(), z[0], z[1]});
        return true;
      };
      try {
        numerics::integrate<2>(rhs, 0.0, {seed.x, seed.y}, t_end, o, observer);
      } catch (const SolverError&) {
        // Step-size collapse near the non-Lipschitz origin: keep what we have.
      }
      return branch;
    };
    Polyline backward = run(-t_span);
    Polyline forward = run(t_span);
    line.reserve(backward.size() + forward.size() + 1);
    line.insert(line.end(), backward.rbegin(), backward.rend());
    line.push_back({0.0, seed.x, seed.y});
    line.insert(line.end(), forward.begin(), forward.end());
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace flamewave
