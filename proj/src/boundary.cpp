#include "adflux/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace adflux {

namespace {

Primitive characteristic_far_field(const Primitive& wi, const Primitive& winf,
                                   const UnitNormal& out, const GasModel& gas) {
  const double g1 = gas.gamma - 1.0;
  const double uni = wi.u * out.nx + wi.v * out.ny;
  const double uninf = winf.u * out.nx + winf.v * out.ny;
  const double ai = gas.sound_speed(wi.rho, wi.p);
  const double ainf = gas.sound_speed(winf.rho, winf.p);

  if (std::abs(uni) >= ai)  // supersonic: fully one-sided
    return (uni > 0.0) ? wi : winf;

  const double rplus = uni + 2.0 * ai / g1;
  const double rminus = uninf - 2.0 * ainf / g1;
  const double unb = 0.5 * (rplus + rminus);
  const double ab = 0.25 * g1 * (rplus - rminus);
  const Primitive& upwind = (unb > 0.0) ? wi : winf;
  const double entropy = upwind.p / std::pow(upwind.rho, gas.gamma);
  const double rhob = std::pow(ab * ab / (gas.gamma * entropy), 1.0 / g1);
  const double pb = rhob * ab * ab / gas.gamma;
  // tangential unit vector (-ny, nx)
  const double utb = -upwind.u * out.ny + upwind.v * out.nx;
  return {rhob, unb * out.nx - utb * out.ny, unb * out.ny + utb * out.nx, pb};
}

}  // namespace

BcType bc_type_from_name(const std::string& name) {
  if (name == "supersonic_inflow") return BcType::supersonic_inflow;
  if (name == "prescribed_post_shock") return BcType::prescribed_post_shock;
  if (name == "zero_gradient_outflow") return BcType::zero_gradient_outflow;
  if (name == "extrapolation") return BcType::extrapolation;
  if (name == "reflective_wall") return BcType::reflective_wall;
  if (name == "far_field") return BcType::far_field;
  if (name == "moving_shock_top") return BcType::moving_shock_top;
  throw std::invalid_argument(
      "unknown boundary type '" + name +
      "'; valid: supersonic_inflow prescribed_post_shock zero_gradient_outflow "
      "extrapolation reflective_wall far_field moving_shock_top");
}

std::string bc_type_name(BcType t) {
  switch (t) {
    case BcType::supersonic_inflow: return "supersonic_inflow";
    case BcType::prescribed_post_shock: return "prescribed_post_shock";
    case BcType::zero_gradient_outflow: return "zero_gradient_outflow";
    case BcType::extrapolation: return "extrapolation";
    case BcType::reflective_wall: return "reflective_wall";
    case BcType::far_field: return "far_field";
    case BcType::moving_shock_top: return "moving_shock_top";
  }
  return "?";
}

Primitive mirror_velocity(const Primitive& w, const UnitNormal& n) {
  const double un = w.u * n.nx + w.v * n.ny;
  return {w.rho, w.u - 2.0 * un * n.nx, w.v - 2.0 * un * n.ny, w.p};
}

void apply_boundary_conditions(FieldState& field, const StructuredMesh& mesh,
                               const BoundarySpec& bc, const GasModel& gas,
                               double t) {
  const int ni = mesh.ni();
  const int nj = mesh.nj();

  if (mesh.periodic_j) {
    for (int i = 0; i < ni; ++i)
      for (int d = 1; d <= 2; ++d) {
        field.u(i, -d) = field.u(i, nj - d);
        field.u(i, nj - 1 + d) = field.u(i, d - 1);
      }
  }

  for (int s = 0; s < 4; ++s) {
    const Side side = static_cast<Side>(s);
    if (mesh.periodic_j && (side == Side::jmin || side == Side::jmax)) continue;
    const int len = (side == Side::imin || side == Side::imax) ? nj : ni;

    for (const BoundaryPatch& patch : bc.patches[s]) {
      const int lo = patch.lo;
      const int hi = patch.hi < 0 ? len : patch.hi;
      for (int k = lo; k < hi; ++k) {
        // interior cell at depth d and ghost cell at depth d, plus the
        // boundary face normal (outward).
        auto interior = [&](int d) -> const Conserved& {
          switch (side) {
            case Side::imin: return field.u(d - 1, k);
            case Side::imax: return field.u(ni - d, k);
            case Side::jmin: return field.u(k, d - 1);
            default: return field.u(k, nj - d);
          }
        };
        auto ghost = [&](int d) -> Conserved& {
          switch (side) {
            case Side::imin: return field.u(-d, k);
            case Side::imax: return field.u(ni - 1 + d, k);
            case Side::jmin: return field.u(k, -d);
            default: return field.u(k, nj - 1 + d);
          }
        };
        auto outward = [&]() -> UnitNormal {
          switch (side) {
            case Side::imin: {
              const UnitNormal n = mesh.xface(0, k).n;
              return {-n.nx, -n.ny};
            }
            case Side::imax: return mesh.xface(ni, k).n;
            case Side::jmin: {
              const UnitNormal n = mesh.yface(k, 0).n;
              return {-n.nx, -n.ny};
            }
            default: return mesh.yface(k, nj).n;
          }
        };
        // Skip sides whose adjacent interior cell is solid; those faces are
        // never fluxed.
        {
          int ii, jj;
          switch (side) {
            case Side::imin: ii = 0; jj = k; break;
            case Side::imax: ii = ni - 1; jj = k; break;
            case Side::jmin: ii = k; jj = 0; break;
            default: ii = k; jj = nj - 1; break;
          }
          if (!mesh.fluid(ii, jj)) continue;
        }

        switch (patch.type) {
          case BcType::supersonic_inflow:
          case BcType::prescribed_post_shock: {
            const Conserved g = conserved_from_primitive(patch.state, gas);
            ghost(1) = g;
            ghost(2) = g;
            break;
          }
          case BcType::zero_gradient_outflow:
          case BcType::extrapolation: {
            ghost(1) = interior(1);
            ghost(2) = interior(1);
            break;
          }
          case BcType::reflective_wall: {
            const UnitNormal n = outward();
            for (int d = 1; d <= 2; ++d) {
              const Primitive w = primitive_from_conserved(interior(d), gas);
              ghost(d) = conserved_from_primitive(mirror_velocity(w, n), gas);
            }
            break;
          }
          case BcType::far_field: {
            const Primitive wi = primitive_from_conserved(interior(1), gas);
            const Primitive wb =
                characteristic_far_field(wi, patch.state, outward(), gas);
            const Conserved g = conserved_from_primitive(wb, gas);
            ghost(1) = g;
            ghost(2) = g;
            break;
          }
          case BcType::moving_shock_top: {
            double x, y;
            switch (side) {
              case Side::jmax:
                x = mesh.cell_cx(k, nj - 1);
                y = mesh.yn(k, nj);
                break;
              default:
                throw std::runtime_error("moving_shock_top: only valid on jmax");
            }
            const MovingShockSpec& ms = bc.shock;
            const double xs = ms.x0 + y / std::tan(ms.angle_rad) +
                              ms.speed * t / std::sin(ms.angle_rad);
            const Primitive& w = (x < xs) ? ms.post : ms.pre;
            const Conserved g = conserved_from_primitive(w, gas);
            ghost(1) = g;
            ghost(2) = g;
            break;
          }
        }
      }
    }
  }
}

}  // namespace adflux
