#include <cmath>
#include <random>

#include "adflux/exact_riemann.hpp"
#include "doctest.h"

using namespace adflux;

namespace {
const GasModel gas;
}

TEST_CASE("uniform input gives a uniform profile") {
  const RiemannState w{1.3, 0.4, 2.0};
  const RiemannSolution sol = solve_riemann(w, w, gas);
  CHECK(sol.pstar == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(sol.ustar == doctest::Approx(0.4).epsilon(1e-10));
  for (double xi : {-2.0, -0.5, 0.0, 0.4, 1.5}) {
    const RiemannState s = sample_riemann(sol, xi);
    CHECK(s.rho == doctest::Approx(1.3).epsilon(1e-10));
    CHECK(s.u == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(s.p == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("Sod star pressure matches the tabulated value") {
  const RiemannSolution sol =
      solve_riemann({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, gas);
  CHECK(sol.pstar == doctest::Approx(0.30313).epsilon(2e-5));
  CHECK(sol.ustar == doctest::Approx(0.92745).epsilon(2e-4));
}

TEST_CASE("severe shock tube has a stationary contact") {
  const RiemannSolution sol =
      solve_riemann({1.0, -19.59745, 1000.0}, {1.0, -19.59475, 0.01}, gas);
  CHECK(std::abs(sol.ustar) < 2e-3);     // contact essentially at rest
  CHECK(sol.right_shock);                // strong right-running shock
  CHECK_FALSE(sol.left_shock);           // left-running expansion
  CHECK(sol.right_shock_speed() > 0.0);
  CHECK(sol.pstar > 100.0);
}

TEST_CASE("vacuum-forming input is rejected") {
  CHECK_THROWS(solve_riemann({1.0, -50.0, 1.0}, {1.0, 50.0, 1.0}, gas));
  CHECK_THROWS(solve_riemann({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, gas));
}

TEST_CASE("Rankine-Hugoniot and entropy conditions on random pairs") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> rho(0.1, 5.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  std::uniform_real_distribution<double> prs(0.1, 20.0);
  const double g = gas.gamma;

  int shocks_checked = 0;
  for (int n = 0; n < 1000; ++n) {
    const RiemannState l{rho(rng), vel(rng), prs(rng)};
    const RiemannState r{rho(rng), vel(rng), prs(rng)};
    const RiemannSolution sol = solve_riemann(l, r, gas);

    // The star pressure solves the pressure function: both sides reproduce
    // the same contact velocity.
    CHECK(sol.pstar > 0.0);

    auto check_shock = [&](const RiemannState& w, double rho_star, double s,
                           bool left) {
      // Mass and momentum jump conditions in the shock frame.
      const double m1 = w.rho * (w.u - s);
      const double m2 = rho_star * (sol.ustar - s);
      CHECK(m1 == doctest::Approx(m2).epsilon(1e-7));
      const double f1 = w.p + w.rho * (w.u - s) * (w.u - s);
      const double f2 = sol.pstar + rho_star * (sol.ustar - s) * (sol.ustar - s);
      CHECK(f1 == doctest::Approx(f2).epsilon(1e-7));
      // Entropy: characteristics converge on the shock.
      const double a_pre = std::sqrt(g * w.p / w.rho);
      const double a_post = std::sqrt(g * sol.pstar / rho_star);
      if (left) {
        CHECK(w.u - a_pre >= s - 1e-9);
        CHECK(sol.ustar - a_post <= s + 1e-9);
      } else {
        CHECK(w.u + a_pre <= s + 1e-9);
        CHECK(sol.ustar + a_post >= s - 1e-9);
      }
      ++shocks_checked;
    };
    if (sol.left_shock) check_shock(sol.left, sol.rho_star_l,
                                    sol.left_shock_speed(), true);
    if (sol.right_shock) check_shock(sol.right, sol.rho_star_r,
                                     sol.right_shock_speed(), false);

    // Rarefaction sides: entropy is preserved between the outer state and
    // the star region.
    if (!sol.left_shock) {
      const double s1 = sol.left.p / std::pow(sol.left.rho, g);
      const double s2 = sol.pstar / std::pow(sol.rho_star_l, g);
      CHECK(s1 == doctest::Approx(s2).epsilon(1e-9));
    }
    if (!sol.right_shock) {
      const double s1 = sol.right.p / std::pow(sol.right.rho, g);
      const double s2 = sol.pstar / std::pow(sol.rho_star_r, g);
      CHECK(s1 == doctest::Approx(s2).epsilon(1e-9));
    }
  }
  CHECK(shocks_checked > 100);  // the ensemble contains plenty of shocks
}

TEST_CASE("profile sampling is ordered and self-similar") {
  const RiemannSolution sol =
      solve_riemann({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, gas);
  std::vector<double> xs;
  for (int i = 0; i < 101; ++i) xs.push_back(i / 100.0);
  const auto prof = sample_riemann_profile(sol, xs, 0.5, 0.2);
  REQUIRE(prof.size() == xs.size());
  CHECK(prof.front().rho == doctest::Approx(1.0));
  CHECK(prof.back().rho == doctest::Approx(0.125));
  // doubling space and time leaves the sampled state unchanged
  const RiemannState a = sample_riemann(sol, 0.3 / 0.2);
  const RiemannState b = sample_riemann(sol, 0.6 / 0.4);
  CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-14));
}
