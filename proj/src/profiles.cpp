#include "flamewave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flamewave/numerics/roots.hpp"

namespace flamewave {

namespace {

constexpr double kClusterInner = 1e-6;  // innermost clustered point, in units of R
constexpr double kClusterOuter = 0.02;

}  // namespace

std::vector<double> tau_grid(double R, int n_points) {
  if (!(R > 0.0)) throw DomainError("tau_grid: R must be positive");
  if (n_points < 16) throw DomainError("tau_grid: need at least 16 points");
  const int n_tail = n_points / 4;   // geometric in tau near xi = R
  const int n_front = n_points / 8;  // geometric in xi near xi = 0
  const int n_mid = n_points - 2 - n_tail - n_front;
  const double ratio = kClusterOuter / kClusterInner;

  std::vector<double> tau;
  tau.reserve(static_cast<std::size_t>(n_points));
  tau.push_back(R);
  for (int k = 0; k < n_front; ++k) {
    const double xi = R * kClusterInner * std::pow(ratio, static_cast<double>(k) / n_front);
    tau.push_back(R - xi);
  }
  for (int k = 0; k < n_mid; ++k) {
    const double xi =
        R * (kClusterOuter + (1.0 - 2.0 * kClusterOuter) * static_cast<double>(k) / (n_mid - 1));
    tau.push_back(R - xi);
  }
  for (int k = n_tail - 1; k >= 0; --k) {
    tau.push_back(R * kClusterInner * std::pow(ratio, static_cast<double>(k) / n_tail));
  }
  tau.push_back(0.0);
  return tau;
}

double s_for_settling_time(const ManifoldCurve& m, double tau) {
  if (!(tau >= 0.0)) throw DomainError("s_for_settling_time: tau must be non-negative");
  if (tau == 0.0) return 0.0;
  const auto& tail = m.tail();
  const double mexp = m.m_exponent();
  const double seed = m.seed_s();
  const auto& steps = m.trajectory().steps;

  if (steps.empty() || tau <= tail.settling(seed)) {
    // Newton on the series, safeguarded by the bracket [lo, hi].
    double lo = 0.0;
    double hi = seed;
    double s = std::min(seed, tau * mexp * std::abs(tail.leading()));
    for (int it = 0; it < 100; ++it) {
      const double f = tail.settling(s) - tau;
      if (f > 0.0) hi = s; else lo = s;
      const double df = -1.0 / (mexp * tail.value(s));
      double next = s - f / df;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - s) <= 4.0 * std::numeric_limits<double>::epsilon() * s) return next;
      s = next;
    }
    return s;
  }

  if (tau >= steps.back().end()[1]) return m.s_max();
  auto it = std::lower_bound(steps.begin(), steps.end(), tau,
                             [](const numerics::DenseStep<2>& st, double t) { return st.end()[1] < t; });
  const auto& st = *it;
  const double a = st.t0;
  const double b = st.t1();
  const double fa = st.start()[1] - tau;
  const double fb = st.end()[1] - tau;
  if (fa >= 0.0) return a;
  if (fb <= 0.0) return b;
  numerics::RootOptions ro;
  ro.x_tol = 4.0 * std::numeric_limits<double>::epsilon() * b;
  ro.max_iter = 400;
  return numerics::find_root([&](double s) { return st.eval(s)[1] - tau; }, a, b, fa, fb, ro).root;
}

Profile build_v_profile(const ManifoldCurve& m, double c, double v0, double R, int n_points,
                        const SolverConfig&) {
  Profile prof;
  prof.params = m.params();
  prof.c = c;
  prof.R = R;
  prof.v0 = v0;
  prof.tau = tau_grid(R, n_points);
  const std::size_t n = prof.tau.size();
  prof.xi.resize(n);
  prof.s.resize(n);
  prof.v.resize(n);
  prof.vp.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = prof.tau[k];
    prof.xi[k] = k == 0 ? 0.0 : (k + 1 == n ? R : R - t);
    double s = k == 0 ? m.s_max() : s_for_settling_time(m, t);
    prof.s[k] = s;
    if (s == 0.0) {
      prof.v[k] = 0.0;
      prof.vp[k] = 0.0;
      continue;
    }
    const ReducedPoint pt = m.point(s);
    prof.v[k] = k == 0 ? v0 : pt.x;
    prof.vp[k] = pt.y;
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!(prof.xi[k] > prof.xi[k - 1]))
      throw SolverError("build_v_profile: grid is not strictly increasing");
  }
  return prof;
}

void build_u_profile(Profile& prof, const ManifoldCurve& m, const SolverConfig& cfg) {
  const std::size_t n = prof.size();
  const double c = prof.c;
  const double la = prof.params.lambda;
  const double mexp = m.m_exponent();
  prof.H.assign(n, 0.0);
  prof.u.assign(n, 0.0);
  prof.up.assign(n, 0.0);

  // Carried settling times at the grid abscissae, so the exponential weights
  // and the integrand use one consistent clock.
  std::vector<double> tc(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) tc[k] = prof.s[k] > 0.0 ? m.point(prof.s[k]).tau : 0.0;

  for (std::size_t k = n - 1; k-- > 0;) {
    const double tk = tc[k];
    const double piece = integrate_along(
        m, prof.s[k + 1], prof.s[k],
        [=](const ReducedPoint& pt) {
          if (pt.s <= 0.0) return 0.0;
          return std::exp(-c * (tk - pt.tau)) * pt.x / (mexp * pt.s);
        },
        cfg.quad_tol);
    prof.H[k] = std::exp(-c * (tk - tc[k + 1])) * prof.H[k + 1] + piece;
  }
  for (std::size_t k = 0; k < n; ++k) {
    prof.u[k] = 1.0 + (1.0 - la) * prof.H[k] - prof.v[k];
    prof.up[k] = c * (1.0 - la) * prof.H[k] - la * prof.vp[k];
  }
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Pre:
      return "pre";
    case Region::Reaction:
      return "reaction";
    case Region::Post:
      return "post";
  }
  return "?";
}

ExtendedProfile extend_full_line(const Profile& prof, double xi_min, double xi_max, int n_side) {
  if (!(xi_min < 0.0 && xi_max > prof.R))
    throw DomainError("extend_full_line: need xi_min < 0 < R < xi_max");
  if (n_side < 1) throw DomainError("extend_full_line: n_side must be positive");
  const auto& p = prof.params;
  const double c = prof.c;
  ExtendedProfile out;
  auto push = [&](double xi, double v, double vp, double u, double up, Region r) {
    out.xi.push_back(xi);
    out.v.push_back(v);
    out.vp.push_back(vp);
    out.u.push_back(u);
    out.up.push_back(up);
    out.region.push_back(r);
  };
  for (int j = 0; j < n_side; ++j) {
    const double xi = xi_min * (1.0 - static_cast<double>(j) / n_side);
    const double ev = std::exp(c * xi / p.lambda);
    const double eu = std::exp(c * xi);
    push(xi, 1.0 - (1.0 - prof.v0) * ev, -(c / p.lambda) * (1.0 - prof.v0) * ev, p.theta * eu,
         c * p.theta * eu, Region::Pre);
  }
  for (std::size_t k = 0; k < prof.size(); ++k)
    push(prof.xi[k], prof.v[k], prof.vp[k], prof.u[k], prof.up[k], Region::Reaction);
  for (int j = 1; j <= n_side; ++j) {
    const double xi = prof.R + (xi_max - prof.R) * static_cast<double>(j) / n_side;
    push(xi, 0.0, 0.0, 1.0, 0.0, Region::Post);
  }
  return out;
}

ExtendedProfile extend_full_line(const Profile& prof) {
  const double decay = std::max(1.0, prof.params.lambda) / prof.c;
  return extend_full_line(prof, -10.0 * decay, prof.R + std::max(0.25 * prof.R, 1.0), 64);
}

JunctionJumps junction_jumps(const Profile& prof) {
  const auto& p = prof.params;
  const double c = prof.c;
  JunctionJumps j;
  j.at_zero = std::max({std::abs(prof.v.front() - prof.v0),
                        std::abs(prof.vp.front() + (c / p.lambda) * (1.0 - prof.v0)),
                        std::abs(prof.u.front() - p.theta), std::abs(prof.up.front() - c * p.theta)});
  j.at_R = std::max({std::abs(prof.v.back()), std::abs(prof.vp.back()),
                     std::abs(prof.u.back() - 1.0), std::abs(prof.up.back())});
  return j;
}

}  // namespace flamewave
