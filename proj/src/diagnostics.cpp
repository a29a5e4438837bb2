#include "flamewave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flamewave/speed.hpp"
#include "flamewave/wave.hpp"

namespace flamewave {

bool DiagnosticsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* DiagnosticsReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Check& DiagnosticsReport::at(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw DomainError("diagnostics: no check named " + name);
  return *c;
}

double holder_slope(const std::vector<double>& tau, const std::vector<double>& v) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < tau.size() && k < v.size(); ++k)
    if (tau[k] > 0.0) pts.emplace_back(tau[k], v[k]);
  std::sort(pts.begin(), pts.end());
  const std::size_t skip = 3;
  if (pts.size() <= skip + 2) return std::numeric_limits<double>::quiet_NaN();
  const double t_first = pts[skip].first;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = skip; k < pts.size() && pts[k].first <= 10.0 * t_first; ++k) {
    const double vv = pts[k].second;
    if (!(vv > 0.0) || !std::isfinite(std::log(vv))) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(pts[k].first);
    const double ly = std::log(vv);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 3) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

class Builder {
 public:
  explicit Builder(DiagnosticsReport& r) : r_(r) {}

  void equality(const std::string& name, double lhs, double rhs, double tol, bool relative) {
    double res = std::abs(lhs - rhs);
    if (relative) res /= std::max({std::abs(lhs), std::abs(rhs), std::numeric_limits<double>::min()});
    push({name, lhs, rhs, res, tol, std::isfinite(res) && res <= tol, CheckKind::Equality});
  }

  // Signed margin: positive means the inequality holds.
  void margin(const std::string& name, double lhs, double rhs, double margin, double tol) {
    push({name, lhs, rhs, margin, tol, std::isfinite(margin) && margin > tol, CheckKind::Inequality});
  }

  void ratio(const std::string& name, double lhs, double rhs, double ratio) {
    push({name, lhs, rhs, ratio, 1.0, std::isfinite(ratio) && ratio <= 1.0, CheckKind::Equality});
  }

  void skipped(const std::string& name) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    push({name, nan, nan, nan, nan, true, CheckKind::Skipped});
  }

 private:
  void push(Check c) { r_.checks.push_back(std::move(c)); }
  DiagnosticsReport& r_;
};

struct OdeResidual {
  double worst_residual = 0.0;
  double worst_tolerance = 0.0;
  double worst_ratio = 0.0;
};

// Three-point derivative of f in xi (spacings taken from tau to keep them
// exact near R), compared with rhs. The tolerance is the leading truncation
// term (h- h+ / 6) |f'''|, f''' supplied by the caller, plus a noise floor.
template <class Third, class Rhs>
OdeResidual ode_residual(const Profile& prof, const std::vector<double>& f, double lead,
                         Rhs&& rhs, Third&& third, double noise) {
  OdeResidual out;
  const std::size_t n = prof.size();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (!(prof.v[k] > 0.0)) continue;
    const double hm = prof.tau[k - 1] - prof.tau[k];
    const double hp = prof.tau[k] - prof.tau[k + 1];
    const double d = (hm * hm * f[k + 1] - hp * hp * f[k - 1] + (hp * hp - hm * hm) * f[k]) /
                     (hm * hp * (hm + hp));
    const double res = std::abs(lead * d - rhs(k));
    const double tol = 10.0 * std::abs(lead) * (hm * hp / 6.0) * std::abs(third(k)) +
                       noise * std::abs(lead) / std::min(hm, hp) + 1e-300;
    const double ratio = res / tol;
    if (ratio > out.worst_ratio || k == 1) {
      out.worst_ratio = ratio;
      out.worst_residual = res;
      out.worst_tolerance = tol;
    }
  }
  return out;
}

}  // namespace

DiagnosticsReport run_diagnostics(const WaveSolution& sol, const SolverConfig& cfg,
                                  const DiagnosticsOptions& opt) {
  DiagnosticsReport report;
  Builder b(report);
  const PhysicalParams& p = sol.profile.params;
  const Profile& prof = sol.profile;
  const ManifoldCurve& m = sol.manifold();
  const double a = p.alpha;
  const double la = p.lambda;
  const double th = p.theta;
  const double c = sol.c();
  const double R = sol.R();
  const double v0 = sol.v0();
  const double mexp = m.m_exponent();
  const double s_max = m.s_max();
  const double qt = cfg.quad_tol;
  const double tol = opt.identity_rel_tol;

  auto along = [&](auto f) {
    return integrate_along(m, 0.0, s_max, [&](const ReducedPoint& pt) { return f(pt); }, qt);
  };

  // Integral identities, evaluated along the manifold: d xi = ds / (m |Y|) * ...
  const double int_va = along([&](const ReducedPoint& pt) { return std::pow(pt.x, a) / (-mexp * pt.Y); });
  const double int_vp2 = along([&](const ReducedPoint& pt) { return std::pow(pt.x, 1.0 + a) * (-pt.Y) / mexp; });
  const double int_v1a = along([&](const ReducedPoint& pt) { return std::pow(pt.x, 1.0 + a) / (-mexp * pt.Y); });
  b.equality("integral_v", c, int_va, tol, true);
  b.equality("energy_vprime", (c * c / (2.0 * la)) * (v0 - 1.0) * (v0 - 1.0) + c * int_vp2,
             std::pow(v0, 1.0 + a) / (1.0 + a), tol, true);
  b.equality("energy_v", -c * v0 * (v0 - 1.0) - la * int_vp2 + 0.5 * c * v0 * v0, int_v1a, tol, true);

  // Speed matching, on a freshly grown manifold for the reported c.
  const double psi_val = psi(p, v0, c, cfg);
  b.equality("psi", psi_val / ((c / la) * (1.0 - v0)), 0.0, tol, false);

  const Bracket cb = c_brackets(p, v0);
  b.margin("c_lower_bound", c, cb.lo, (c - cb.lo) / c, 0.0);
  b.margin("c_upper_bound", c, cb.hi, (cb.hi - c) / c, 0.0);
  const Bracket rb = r_bounds(p, v0);
  b.margin("R_lower_bound", R, rb.lo, (R - rb.lo) / R, 0.0);
  b.margin("R_upper_bound", R, rb.hi, (rb.hi - R) / R, 0.0);
  if (v0 < lc_axis_crossing(p, c)) {
    const double up = settling_upper_bound(p, c, v0);
    b.margin("settling_upper_bound", R, up, (up - R) / R, 0.0);
  } else {
    b.skipped("settling_upper_bound");
  }

  // Envelope and lower-curve margins in the reduced form:
  //   L0 < y < l_c    <=>  0 < Y - d0 < (c / lambda) s
  //   y > -x^alpha/c  <=>  c s |Y| < 1
  {
    const int n = std::max(2, opt.envelope_samples);
    const int n_geo = n / 2;
    double env_lo = std::numeric_limits<double>::infinity();
    double env_hi = env_lo;
    double lower = env_lo;
    double worst_lo_s = 0, worst_hi_s = 0, worst_lc_s = 0;
    for (int k = 0; k < n; ++k) {
      double s;
      if (k < n_geo)
        s = s_max * std::pow(10.0, -8.0 * (1.0 - static_cast<double>(k) / n_geo));
      else
        s = s_max * static_cast<double>(k - n_geo + 1) / (n - n_geo);
      s = std::min(s, s_max);
      const double dev = m.reduced_deviation(s);
      const double Y = m.tail().leading() + dev;
      const double width = (c / la) * s;
      const double r = dev / width;
      if (r < env_lo) { env_lo = r; worst_lo_s = s; }
      if (1.0 - r < env_hi) { env_hi = 1.0 - r; worst_hi_s = s; }
      const double lm = 1.0 - c * s * std::abs(Y);
      if (lm < lower) { lower = lm; worst_lc_s = s; }
    }
    b.margin("envelope_lower", m.x_of_s(worst_lo_s), 0.0, env_lo, 0.0);
    b.margin("envelope_upper", m.x_of_s(worst_hi_s), 0.0, env_hi, 0.0);
    b.margin("lower_curve", m.x_of_s(worst_lc_s), 0.0, lower, 0.0);
  }

  // Profile shape.
  {
    const double expected = 2.0 / (1.0 - a);
    const double slope = holder_slope(prof.tau, prof.v);
    if (std::isfinite(slope))
      b.equality("holder_exponent", slope, expected, opt.holder_rel_tol, true);
    else
      b.skipped("holder_exponent");

    double vp_scale = 0.0;
    for (double x : prof.vp) vp_scale = std::max(vp_scale, std::abs(x));
    double convex = std::numeric_limits<double>::infinity();
    double mono = convex;
    for (std::size_t k = 0; k + 1 < prof.size(); ++k) {
      convex = std::min(convex, (prof.vp[k + 1] - prof.vp[k]) / vp_scale);
      mono = std::min(mono, (prof.v[k] - prof.v[k + 1]) / v0);
    }
    b.margin("convexity", 0.0, 0.0, convex, -1e-12);
    b.margin("monotone_v", 0.0, 0.0, mono, -1e-15);
  }

  // Interface conditions.
  const double bt = opt.boundary_tol;
  b.equality("bc_v0", prof.v.front(), v0, bt, false);
  b.equality("bc_vp0", prof.vp.front(), -(c / la) * (1.0 - v0), bt, false);
  b.equality("bc_u0", prof.u.front(), th, bt, false);
  b.equality("bc_up0", prof.up.front(), c * th, bt, false);
  b.equality("bc_vR", prof.v.back(), 0.0, bt, false);
  b.equality("bc_vpR", prof.vp.back(), 0.0, bt, false);
  b.equality("bc_uR", prof.u.back(), 1.0, bt, false);
  b.equality("bc_upR", prof.up.back(), 0.0, bt, false);

  // Both closure forms and their integration-by-parts link J = v0 - c K.
  {
    const ScalarWave& w = sol.closure.wave;
    const double J = weighted_slope_integral(w, cfg);
    const double K = weighted_value_integral(w, cfg);
    const double g_phi = 1.0 - th + (1.0 - la) * J - v0;
    const double g_psi = (1.0 - th - c * (1.0 - la) * K) / la - v0;
    b.equality("equiv_phi", g_phi, 0.0, tol, false);
    b.equality("equiv_psi", g_psi, 0.0, tol, false);
    b.equality("equiv_cross", J, v0 - c * K, tol, false);
  }

  // Settling time from the quadrature against the value carried by the ODE.
  b.equality("settling_consistency", R, m.settling_carried(s_max), tol, true);

  if (la == 1.0) {
    double w_dev = 0.0;
    for (std::size_t k = 0; k < prof.size(); ++k)
      w_dev = std::max(w_dev, std::abs(prof.u[k] + prof.v[k] - 1.0));
    b.equality("lambda_one_w", w_dev, 0.0, opt.lambda_one_tol, false);
  } else {
    b.skipped("lambda_one_w");
  }

  // ODE residuals on the grid, against the leading truncation term.
  {
    auto v2 = [&](std::size_t k) { return (c * prof.vp[k] + std::pow(prof.v[k], a)) / la; };
    auto v3 = [&](std::size_t k) {
      return (c * v2(k) + a * std::pow(prof.v[k], a - 1.0) * prof.vp[k]) / la;
    };
    auto v4 = [&](std::size_t k) {
      const double x = prof.v[k];
      const double y = prof.vp[k];
      return (c * v3(k) + a * (a - 1.0) * std::pow(x, a - 2.0) * y * y +
              a * std::pow(x, a - 1.0) * v2(k)) / la;
    };
    double vp_scale = 0.0;
    double up_scale = 0.0;
    for (std::size_t k = 0; k < prof.size(); ++k) {
      vp_scale = std::max(vp_scale, std::abs(prof.vp[k]));
      up_scale = std::max(up_scale, std::abs(prof.up[k]));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double noise_v = 10.0 * (eps + cfg.ode_rel_tol) * vp_scale;
    const auto rv = ode_residual(
        prof, prof.vp, la,
        [&](std::size_t k) { return c * prof.vp[k] + std::pow(prof.v[k], a); }, v4, noise_v);
    b.ratio("ode_residual_v", rv.worst_residual, rv.worst_tolerance, rv.worst_ratio);

    auto u2 = [&](std::size_t k) { return c * prof.up[k] - std::pow(prof.v[k], a); };
    auto u3 = [&](std::size_t k) {
      return c * u2(k) - a * std::pow(prof.v[k], a - 1.0) * prof.vp[k];
    };
    auto u4 = [&](std::size_t k) {
      const double x = prof.v[k];
      const double y = prof.vp[k];
      return c * u3(k) - a * (a - 1.0) * std::pow(x, a - 2.0) * y * y -
             a * std::pow(x, a - 1.0) * v2(k);
    };
    const double noise_u = 10.0 * (eps + std::max(cfg.ode_rel_tol, qt)) * std::max(up_scale, vp_scale);
    const auto ru = ode_residual(
        prof, prof.up, 1.0,
        [&](std::size_t k) { return c * prof.up[k] - std::pow(prof.v[k], a); }, u4, noise_u);
    b.ratio("ode_residual_u", ru.worst_residual, ru.worst_tolerance, ru.worst_ratio);
  }

  {
    const JunctionJumps j = junction_jumps(prof);
    b.equality("junction_zero", j.at_zero, 0.0, bt, false);
    b.equality("junction_R", j.at_R, 0.0, bt, false);
  }
  return report;
}

}  // namespace flamewave
