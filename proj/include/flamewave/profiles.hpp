// Wave profiles on [0, R] and their closed-form continuation to the line.
//
// v is obtained from the manifold: a point with settling time tau = R - xi
// has v = x and v' = y there. The grid is built in tau, clustered near both
// ends, and each grid point is located on the manifold by inverting tau(s).
//
// u comes from the enthalpy w = u + v, which solves w' - c w = (1 - lambda) v' - c
// with w(R) = 1:
//
//   w(xi) = 1 + (1 - lambda) H(xi),   H(xi) = int_xi^R e^{-c (s - xi)} (-v'(s)) ds,
//   u = w - v,   u' = c (1 - lambda) H - lambda v'.

#ifndef FLAMEWAVE_PROFILES_HPP
#define FLAMEWAVE_PROFILES_HPP

#include <string>
#include <vector>

#include "flamewave/manifold.hpp"
#include "flamewave/model.hpp"

namespace flamewave {

struct Profile {
  std::vector<double> xi;
  std::vector<double> tau;  // R - xi, kept separately to avoid cancellation near R
  std::vector<double> s;    // manifold abscissa of each grid point
  std::vector<double> v;
  std::vector<double> vp;
  std::vector<double> u;
  std::vector<double> up;
  std::vector<double> H;  // enthalpy kernel, see above
  double c = 0.0;
  double R = 0.0;
  double v0 = 0.0;
  PhysicalParams params;

  [[nodiscard]] std::size_t size() const { return xi.size(); }
};

/// Grid of settling times on [0, R], ascending in xi (descending in tau),
/// with geometric clustering at both ends. First entry tau = R, last tau = 0.
std::vector<double> tau_grid(double R, int n_points);

/// Manifold abscissa s with carried settling time tau (0 <= tau <= T(s_max)).
double s_for_settling_time(const ManifoldCurve& m, double tau);

/// xi, tau, v, v' on the grid. R is the trailing-interface position.
Profile build_v_profile(const ManifoldCurve& m, double c, double v0, double R, int n_points,
                        const SolverConfig& cfg);

/// Fills u, u' and H in place.
void build_u_profile(Profile& prof, const ManifoldCurve& m, const SolverConfig& cfg);

enum class Region { Pre, Reaction, Post };
const char* to_string(Region r);

struct ExtendedProfile {
  std::vector<double> xi;
  std::vector<double> v;
  std::vector<double> vp;
  std::vector<double> u;
  std::vector<double> up;
  std::vector<Region> region;
};

/// Closed forms outside [0, R]:
///   xi < 0:  u = theta e^{c xi},  v = 1 - (1 - v0) e^{c xi / lambda}
///   xi > R:  u = 1, v = 0
/// n_side points are placed on each side (excluding the junctions).
ExtendedProfile extend_full_line(const Profile& prof, double xi_min, double xi_max, int n_side);

/// Default window: about ten decay lengths ahead of the front and R/4 behind.
ExtendedProfile extend_full_line(const Profile& prof);

/// Jumps of (v, v', u, u') at xi = 0 and xi = R between the interior profile
/// and the closed-form continuation.
struct JunctionJumps {
  double at_zero = 0.0;
  double at_R = 0.0;
};
JunctionJumps junction_jumps(const Profile& prof);

}  // namespace flamewave

#endif  // FLAMEWAVE_PROFILES_HPP
