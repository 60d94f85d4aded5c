#ifndef ADFLUX_DIAGNOSTICS_HPP
#define ADFLUX_DIAGNOSTICS_HPP

#include <vector>

#include "adflux/field.hpp"

namespace adflux {

/// Transverse decoupling measure for channel flows: max over columns of the
/// density standard deviation down the column, normalized by a reference
/// density (the mean post-shock value for the planar-shock case).
double odd_even_asymmetry(const FieldState& field, const StructuredMesh& mesh,
                          const GasModel& gas, double rho_ref);

struct ProfileSample {
  double x = 0.0;
  double value = 0.0;
};

/// Pressure along the stagnation line of a body-fitted half-grid (the two
/// rows adjacent to y = 0 averaged), ordered from the body outward.
std::vector<ProfileSample> centerline_pressure(const FieldState& field,
                                               const StructuredMesh& mesh,
                                               const GasModel& gas);

/// Wall pressure at the stagnation point (body end of the centerline).
double stagnation_point_pressure(const FieldState& field, const StructuredMesh& mesh,
                                 const GasModel& gas);

/// Pressure immediately downstream of the bow shock on the centerline: the
/// first sample past the steepest front where the profile flattens to the
/// smooth compression slope.
double post_shock_centerline_pressure(const FieldState& field,
                                      const StructuredMesh& mesh,
                                      const GasModel& gas);

/// cp = (p - p_inf) / (0.5 rho_inf q_inf^2) per fluid cell.
Array2D<double> cp_field(const FieldState& field, const StructuredMesh& mesh,
                         const GasModel& gas, const Primitive& freestream);

/// (p_max - p_min) / p_max over fluid cells.
double pressure_fluctuation(const FieldState& field, const StructuredMesh& mesh,
                            const GasModel& gas);

/// Straightness of a captured near-vertical shock front: the front position
/// is located per row by a mid-value crossing (subcell interpolated), a line
/// is fitted over the rows, and the maximum deviation is reported in cell
/// units. Rows are restricted to y < y_max.
double shock_kink_metric(const FieldState& field, const StructuredMesh& mesh,
                         const GasModel& gas, double y_max, double rho_mid);

/// Totals over fluid cells (conservation checks).
struct ConservedTotals {
  double mass = 0.0;
  double energy = 0.0;
};
ConservedTotals conserved_totals(const FieldState& field, const StructuredMesh& mesh);

/// L1 density error of the j = 0 row against reference values per cell.
double l1_density_error(const FieldState& field, const StructuredMesh& mesh,
                        const std::vector<double>& rho_exact);

}  // namespace adflux

#endif
