#include "adflux/exact_riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace adflux {

namespace {

struct SideFns {
  // Pressure function f_K(p) and its derivative for one side of the fan.
  double rho, u, p, a, g;

  double A() const { return 2.0 / ((g + 1.0) * rho); }
  double B() const { return (g - 1.0) / (g + 1.0) * p; }

  double f(double ps) const {
    if (ps > p)  // shock branch
      return (ps - p) * std::sqrt(A() / (ps + B()));
    return 2.0 * a / (g - 1.0) * (std::pow(ps / p, (g - 1.0) / (2.0 * g)) - 1.0);
  }
  double df(double ps) const {
    if (ps > p) {
      const double q = std::sqrt(A() / (ps + B()));
      return q * (1.0 - 0.5 * (ps - p) / (ps + B()));
    }
    return std::pow(ps / p, -(g + 1.0) / (2.0 * g)) / (rho * a);
  }
};

}  // namespace

double RiemannSolution::left_shock_speed() const {
  const double a = std::sqrt(gamma * left.p / left.rho);
  const double r = pstar / left.p;
  return left.u -
         a * std::sqrt((gamma + 1.0) / (2.0 * gamma) * r +
                       (gamma - 1.0) / (2.0 * gamma));
}

double RiemannSolution::right_shock_speed() const {
  const double a = std::sqrt(gamma * right.p / right.rho);
  const double r = pstar / right.p;
  return right.u +
         a * std::sqrt((gamma + 1.0) / (2.0 * gamma) * r +
                       (gamma - 1.0) / (2.0 * gamma));
}

RiemannSolution solve_riemann(const RiemannState& l, const RiemannState& r,
                              const GasModel& gas) {
  if (!(l.rho > 0.0 && l.p > 0.0 && r.rho > 0.0 && r.p > 0.0))
    throw std::invalid_argument("riemann: unphysical input state");
  const double g = gas.gamma;
  const SideFns fl{l.rho, l.u, l.p, std::sqrt(g * l.p / l.rho), g};
  const SideFns fr{r.rho, r.u, r.p, std::sqrt(g * r.p / r.rho), g};
  const double du = r.u - l.u;

  if (2.0 * fl.a / (g - 1.0) + 2.0 * fr.a / (g - 1.0) <= du)
    throw std::invalid_argument("riemann: vacuum-forming input");

  // Two-rarefaction guess, safe for any positive input.
  const double z = (g - 1.0) / (2.0 * g);
  double ps = std::pow(
      (fl.a + fr.a - 0.5 * (g - 1.0) * du) /
          (fl.a / std::pow(l.p, z) + fr.a / std::pow(r.p, z)),
      1.0 / z);
  ps = std::max(ps, 1e-14);

  RiemannSolution sol;
  sol.gamma = g;
  sol.left = l;
  sol.right = r;
  const double scale = std::max({l.p, r.p, 1e-14});
  for (int it = 0; it < 200; ++it) {
    const double res = fl.f(ps) + fr.f(ps) + du;
    const double newp = ps - res / (fl.df(ps) + fr.df(ps));
    const double next = newp > 0.0 ? newp : 0.5 * ps;
    sol.newton_iterations = it + 1;
    if (std::abs(next - ps) <= 1e-12 * (ps + scale)) {
      ps = next;
      break;
    }
    ps = next;
  }
  sol.pstar = ps;
  sol.ustar = 0.5 * (l.u + r.u) + 0.5 * (fr.f(ps) - fl.f(ps));
  const double beta = (g - 1.0) / (g + 1.0);
  sol.left_shock = ps > l.p;
  sol.right_shock = ps > r.p;
  sol.rho_star_l = sol.left_shock
                       ? l.rho * (ps / l.p + beta) / (beta * ps / l.p + 1.0)
                       : l.rho * std::pow(ps / l.p, 1.0 / g);
  sol.rho_star_r = sol.right_shock
                       ? r.rho * (ps / r.p + beta) / (beta * ps / r.p + 1.0)
                       : r.rho * std::pow(ps / r.p, 1.0 / g);
  return sol;
}

RiemannState sample_riemann(const RiemannSolution& sol, double xi) {
  const double g = sol.gamma;
  const double gm = g - 1.0;
  const double gp = g + 1.0;

  if (xi <= sol.ustar) {
    const RiemannState& w = sol.left;
    const double a = std::sqrt(g * w.p / w.rho);
    if (sol.left_shock) {
      const double s = sol.left_shock_speed();
      if (xi <= s) return w;
      return {sol.rho_star_l, sol.ustar, sol.pstar};
    }
    const double head = w.u - a;
    const double astar = a * std::pow(sol.pstar / w.p, gm / (2.0 * g));
    const double tail = sol.ustar - astar;
    if (xi <= head) return w;
    if (xi >= tail) return {sol.rho_star_l, sol.ustar, sol.pstar};
    const double c = 2.0 / gp + gm / (gp * a) * (w.u - xi);
    return {w.rho * std::pow(c, 2.0 / gm),
            2.0 / gp * (a + 0.5 * gm * w.u + xi),
            w.p * std::pow(c, 2.0 * g / gm)};
  }

  const RiemannState& w = sol.right;
  const double a = std::sqrt(g * w.p / w.rho);
  if (sol.right_shock) {
    const double s = sol.right_shock_speed();
    if (xi >= s) return w;
    return {sol.rho_star_r, sol.ustar, sol.pstar};
  }
  const double head = w.u + a;
  const double astar = a * std::pow(sol.pstar / w.p, gm / (2.0 * g));
  const double tail = sol.ustar + astar;
  if (xi >= head) return w;
  if (xi <= tail) return {sol.rho_star_r, sol.ustar, sol.pstar};
  const double c = 2.0 / gp - gm / (gp * a) * (w.u - xi);
  return {w.rho * std::pow(c, 2.0 / gm),
          2.0 / gp * (-a + 0.5 * gm * w.u + xi),
          w.p * std::pow(c, 2.0 * g / gm)};
}

std::vector<RiemannState> sample_riemann_profile(const RiemannSolution& sol,
                                                 const std::vector<double>& x,
                                                 double x0, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("riemann profile: need t > 0");
  std::vector<RiemannState> out;
  out.reserve(x.size());
  for (double xi : x) out.push_back(sample_riemann(sol, (xi - x0) / t));
  return out;
}

}  // namespace adflux
