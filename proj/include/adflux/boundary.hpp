#ifndef ADFLUX_BOUNDARY_HPP
#define ADFLUX_BOUNDARY_HPP

#include <string>
#include <vector>

#include "adflux/field.hpp"

namespace adflux {

enum class BcType {
  supersonic_inflow,     // ghost = prescribed state
  prescribed_post_shock, // same mechanics, named per its role in the cases
  zero_gradient_outflow, // ghost = adjacent interior cell
  extrapolation,         // ghost = adjacent interior cell
  reflective_wall,       // mirror the normal velocity
  far_field,             // characteristic in/outflow against a reference state
  moving_shock_top,      // pre/post state switched by the analytic shock foot
};

BcType bc_type_from_name(const std::string& name);
std::string bc_type_name(BcType t);

enum class Side { imin = 0, imax = 1, jmin = 2, jmax = 3 };

/// Oblique shock sweeping along a boundary: the foot position at elevation y
/// is x0 + y/tan(angle) + speed*t/sin(angle).
struct MovingShockSpec {
  double x0 = 0.0;
  double angle_rad = 0.0;
  double speed = 0.0;
  Primitive pre{};
  Primitive post{};
};

struct BoundaryPatch {
  BcType type = BcType::zero_gradient_outflow;
  // Cell-index range [lo, hi) along the side; hi < 0 means the whole side.
  int lo = 0;
  int hi = -1;
  Primitive state{};
};

struct BoundarySpec {
  std::vector<BoundaryPatch> patches[4];  // indexed by Side
  MovingShockSpec shock{};

  void set(Side s, BoundaryPatch p) { patches[static_cast<int>(s)] = {p}; }
  void add(Side s, BoundaryPatch p) { patches[static_cast<int>(s)].push_back(p); }
};

/// Fill both ghost layers on every side. Periodic j-seams (O-grids) wrap
/// instead of using the jmin/jmax patches. Ghost states are physical by
/// construction whenever the interior is.
void apply_boundary_conditions(FieldState& field, const StructuredMesh& mesh,
                               const BoundarySpec& bc, const GasModel& gas, double t);

/// Mirror a primitive state across a plane with unit normal n.
Primitive mirror_velocity(const Primitive& w, const UnitNormal& n);

}  // namespace adflux

#endif
