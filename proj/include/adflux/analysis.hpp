#ifndef ADFLUX_ANALYSIS_HPP
#define ADFLUX_ANALYSIS_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "adflux/fluxes.hpp"
#include "adflux/solver.hpp"

namespace adflux {

/// Density and pressure ratios of a steady normal shock at upstream Mach m.
double rankine_hugoniot_density_ratio(double m, const GasModel& gas);
double rankine_hugoniot_pressure_ratio(double m, const GasModel& gas);

/// Steady normal-shock base state on the unit square: upstream
/// (1, 1, 0, 1/(g m^2)) for x < 0.5 and the Rankine-Hugoniot downstream
/// state beyond. The mass flux rho*u is one on both sides.
struct SteadyShockSetup {
  double mach = 2.0;
  Primitive left{};
  Primitive right{};
  int ni = 11;
  int nj = 11;
  double perturbation = 0.0;   // optional random noise added to the base state
  double epsilon = 1e-6;       // Jacobian column step (central differences)
  unsigned seed = 20260809;
  bool periodic_topbottom = false;  // default: zero gradient
};

SteadyShockSetup steady_shock_state(double mach, const GasModel& gas);

/// Dense stability matrix S = d(residual)/d(conserved), assembled by
/// one-sided differences about the noisy base state. Unknown ordering is
/// cell-major, four components per cell.
Eigen::MatrixXd build_stability_matrix(const SteadyShockSetup& setup,
                                       const SchemeConfig& scheme,
                                       const GasModel& gas);

/// Largest real part of the spectrum, by the dense Schur-based nonsymmetric
/// eigensolver. Accuracy is of order 1e-8 * ||S|| on these matrix sizes;
/// failure to converge raises.
double max_real_eigenvalue(const Eigen::MatrixXd& s);

/// Numerical zero for classifying steady-shock spectra. A steady thin shock
/// always carries an (at best) neutral displacement mode, so genuinely
/// stable schemes land at |lambda| up to ~1e-2 while unstable ones sit
/// decades above; the threshold is about 5e-4 of the operator norm.
inline constexpr double kStabilityNumericalZero = 0.015;

/// One-step evolution factors of saw-tooth perturbations on a transverse
/// mean flow (normal velocity zero, shear velocity u0). Each factor is
/// measured from its own selectively seeded run, with +A and -A runs
/// averaged to cancel the leading nonlinear bias.
struct PerturbationResult {
  double nu = 0.0;            // calibrated from the pressure factor
  double courant_ref = 0.0;   // a0*dt/dy, for cross-validation
  double p_factor = 0.0;      // p^{n+1}/p^n
  double rho_factor = 0.0;    // density-seeded run
  double shear_factor = 0.0;  // shear-seeded run
  double rho_from_p = 0.0;    // density response per unit pressure seed
};

PerturbationResult perturbation_experiment(const SchemeConfig& scheme,
                                           const GasModel& gas, double u0 = 0.0,
                                           double courant = 0.3,
                                           double amplitude = 1e-6, int ncells = 32);

/// Closed-form factors the saw-tooth analysis predicts for the four schemes
/// of interest, as functions of nu and the (possibly forced) sensor value.
struct PerturbationPrediction {
  double p_factor = 0.0;
  double rho_factor = 0.0;
  double shear_factor = 0.0;
  double rho_from_p = 0.0;
};

PerturbationPrediction perturbation_prediction(Scheme scheme, double nu, double fp1,
                                               const GasModel& gas);

/// Overshoot metrics of a 1D profile against an oracle profile on the same
/// points: positive excess above the oracle's maximum / below its minimum,
/// and the number of direction changes beyond those of the oracle.
struct MonotonicityReport {
  double overshoot = 0.0;
  double undershoot = 0.0;
  int spurious_extrema = 0;
};

/// prominence_rel sets the smallest direction change that counts, relative
/// to the oracle's value range.
MonotonicityReport monotonicity_check(const std::vector<double>& profile,
                                      const std::vector<double>& exact,
                                      double prominence_rel = 1e-6);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace adflux

#endif
