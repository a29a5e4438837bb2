// Adaptive Dormand-Prince 5(4) integrator with the classical continuous
// extension (Hairer, Norsett & Wanner, "Solving ODEs I", dopri5).
//
// Every accepted step is recorded with its interpolation coefficients, so a
// finished Trajectory can be evaluated anywhere inside the integrated range.

#ifndef FLAMEWAVE_NUMERICS_DOPRI5_HPP
#define FLAMEWAVE_NUMERICS_DOPRI5_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "flamewave/model.hpp"

namespace flamewave::numerics {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  // y(t0 + s h) = r0 + s (r1 + (1-s) (r2 + s (r3 + (1-s) r4)))
  std::array<State<N>, 5> coef{};

  [[nodiscard]] double t1() const { return t0 + h; }

  [[nodiscard]] State<N> eval(double t) const {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    State<N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      out[i] = coef[0][i] +
               s * (coef[1][i] + s1 * (coef[2][i] + s * (coef[3][i] + s1 * coef[4][i])));
    }
    return out;
  }

  [[nodiscard]] State<N> start() const { return coef[0]; }
  [[nodiscard]] State<N> end() const {
    State<N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = coef[0][i] + coef[1][i];
    return out;
  }
};

/// Accepted steps of one integration, ordered along the direction of travel.
template <std::size_t N>
struct Trajectory {
  std::vector<DenseStep<N>> steps;

  [[nodiscard]] bool empty() const { return steps.empty(); }
  [[nodiscard]] double t_begin() const { return steps.front().t0; }
  [[nodiscard]] double t_end() const { return steps.back().t1(); }

  /// Index of the step containing t; only valid for forward (h > 0) runs.
  [[nodiscard]] std::size_t locate(double t) const {
    auto it = std::upper_bound(steps.begin(), steps.end(), t,
                               [](double v, const DenseStep<N>& st) { return v < st.t0; });
    if (it == steps.begin()) return 0;
    return static_cast<std::size_t>(std::distance(steps.begin(), it) - 1);
  }

  [[nodiscard]] State<N> eval(double t) const { return steps[locate(t)].eval(t); }
};

struct Dopri5Options {
  double rtol = 1e-10;
  double atol = 1e-14;
  double h_init = 0.0;  // 0 selects an automatic initial step
  double h_min = 0.0;   // 0 means 1e-14 |t|
  long max_steps = 200000;
};

enum class StopReason { reached_end, stopped_by_observer };

template <std::size_t N>
struct Dopri5Result {
  Trajectory<N> trajectory;
  StopReason reason = StopReason::reached_end;
  long rejected = 0;
  double first_step = 0.0;
};

namespace detail {

inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
inline constexpr double d1 = -12715105075.0 / 11282082432.0,
                        d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0,
                        d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace detail

/// Integrates y' = f(t, y) from t0 towards t_end (either direction).
/// `observer(step)` is called after each accepted step; returning false
/// stops the integration after that step. Throws SolverError on step-size
/// underflow, step budget exhaustion or a non-finite state.
template <std::size_t N, class Rhs, class Observer>
Dopri5Result<N> integrate(Rhs&& f, double t0, State<N> y0, double t_end,
                          const Dopri5Options& opt, Observer&& observer) {
  using namespace detail;
  Dopri5Result<N> out;
  const double dir = t_end >= t0 ? 1.0 : -1.0;
  const double span = std::abs(t_end - t0);
  if (span == 0.0) return out;

  auto err_scale = [&](const State<N>& a, const State<N>& b, std::size_t i) {
    return opt.atol + opt.rtol * std::max(std::abs(a[i]), std::abs(b[i]));
  };

  State<N> k1 = f(t0, y0);
  double h = opt.h_init;
  if (h <= 0.0) {
    // Hairer's starting-step heuristic.
    double d0 = 0.0, dd1 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt.atol + opt.rtol * std::abs(y0[i]);
      d0 += (y0[i] / sc) * (y0[i] / sc);
      dd1 += (k1[i] / sc) * (k1[i] / sc);
    }
    d0 = std::sqrt(d0 / N);
    dd1 = std::sqrt(dd1 / N);
    double h0 = (d0 < 1e-5 || dd1 < 1e-5) ? 1e-6 : 0.01 * d0 / dd1;
    h0 = std::min(h0, span);
    State<N> y1{};
    for (std::size_t i = 0; i < N; ++i) y1[i] = y0[i] + dir * h0 * k1[i];
    const State<N> k2 = f(t0 + dir * h0, y1);
    double d2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt.atol + opt.rtol * std::abs(y0[i]);
      d2 += ((k2[i] - k1[i]) / sc) * ((k2[i] - k1[i]) / sc);
    }
    d2 = std::sqrt(d2 / N) / h0;
    const double dm = std::max(dd1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    h = std::min({100.0 * h0, h1, span});
  }
  h = std::min(h, span);
  out.first_step = h;

  double t = t0;
  State<N> y = y0;
  long steps = 0;
  bool last_rejected = false;
  while (dir * (t_end - t) > 0.0) {
    if (++steps > opt.max_steps) throw SolverError("dopri5: step budget exhausted");
    const double h_min = opt.h_min > 0.0 ? opt.h_min : 1e-14 * std::max(1.0, std::abs(t));
    if (h < h_min) throw SolverError("dopri5: step size underflow");
    bool final_step = false;
    if (h >= dir * (t_end - t)) {
      h = dir * (t_end - t);
      final_step = true;
    }
    const double hs = dir * h;
    State<N> tmp{}, k2, k3, k4, k5, k6, k7, y1{};
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
    k2 = f(t + c2 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(t + c3 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(t + c4 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(t + c5 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(t + hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      y1[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    k7 = f(t + hs, y1);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double r = e / err_scale(y, y1, i);
      err += r * r;
      finite = finite && std::isfinite(y1[i]);
    }
    err = std::sqrt(err / N);
    if (!finite || !std::isfinite(err)) {
      // Treat as a hard rejection and retry with a much smaller step.
      h *= 0.1;
      last_rejected = true;
      ++out.rejected;
      continue;
    }

    if (err <= 1.0) {
      DenseStep<N> st;
      st.t0 = t;
      st.h = hs;
      for (std::size_t i = 0; i < N; ++i) {
        const double ydiff = y1[i] - y[i];
        const double bspl = hs * k1[i] - ydiff;
        st.coef[0][i] = y[i];
        st.coef[1][i] = ydiff;
        st.coef[2][i] = bspl;
        st.coef[3][i] = ydiff - hs * k7[i] - bspl;
        st.coef[4][i] =
            hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      out.trajectory.steps.push_back(st);
      t = final_step ? t_end : t + hs;
      y = y1;
      k1 = k7;
      if (!observer(out.trajectory.steps.back())) {
        out.reason = StopReason::stopped_by_observer;
        return out;
      }
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
      fac = std::clamp(fac, 0.2, last_rejected ? 1.0 : 10.0);
      h *= fac;
      last_rejected = false;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      last_rejected = true;
      ++out.rejected;
    }
  }
  return out;
}

template <std::size_t N, class Rhs>
Dopri5Result<N> integrate(Rhs&& f, double t0, State<N> y0, double t_end,
                          const Dopri5Options& opt) {
  return integrate<N>(std::forward<Rhs>(f), t0, y0, t_end, opt,
                      [](const DenseStep<N>&) { return true; });
}

}  // namespace flamewave::numerics

#endif  // FLAMEWAVE_NUMERICS_DOPRI5_HPP
