#ifndef ADFLUX_EXACT_RIEMANN_HPP
#define ADFLUX_EXACT_RIEMANN_HPP

#include <vector>

#include "adflux/euler.hpp"

namespace adflux {

/// 1D state for the Riemann problem (tangential velocity plays no role in
/// the wave structure and is advected with the contact).
struct RiemannState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct RiemannSolution {
  RiemannState left, right;
  double pstar = 0.0;
  double ustar = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  bool left_shock = false;
  bool right_shock = false;
  double gamma = 1.4;
  int newton_iterations = 0;

  /// Shock speeds (defined only for the shock branches).
  double left_shock_speed() const;
  double right_shock_speed() const;
};

/// Exact solution of the Riemann problem via Newton iteration on the star
/// pressure (residual tolerance 1e-12). Vacuum-forming input is rejected.
RiemannSolution solve_riemann(const RiemannState& l, const RiemannState& r,
                              const GasModel& gas);

/// Self-similar solution sampled at xi = x/t.
RiemannState sample_riemann(const RiemannSolution& sol, double xi);

/// Profile sampled at the given x positions for diaphragm position x0 and
/// time t > 0.
std::vector<RiemannState> sample_riemann_profile(const RiemannSolution& sol,
                                                 const std::vector<double>& x,
                                                 double x0, double t);

}  // namespace adflux

#endif
