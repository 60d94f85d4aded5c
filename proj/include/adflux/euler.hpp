#ifndef ADFLUX_EULER_HPP
#define ADFLUX_EULER_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adflux {

/// Calorically perfect gas. All quantities are nondimensional.
struct GasModel {
  double gamma = 1.4;

  double sound_speed(double rho, double p) const { return std::sqrt(gamma * p / rho); }
};

/// Cell-averaged conserved state (rho, rho*u, rho*v, rho*E) in global coordinates.
struct Conserved {
  double rho = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double e = 0.0;  // total energy per unit volume
};

/// Primitive state (rho, u, v, p) in global coordinates.
struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

/// Primitive state expressed in a face-normal frame: un is the velocity
/// component along the face normal, ut the tangential component.
struct FaceState {
  double rho = 0.0;
  double un = 0.0;
  double ut = 0.0;
  double p = 0.0;
};

/// Unit outward normal of a face. Construction does not normalize;
/// callers are expected to pass unit vectors (checked by the rotations).
struct UnitNormal {
  double nx = 1.0;
  double ny = 0.0;
};

/// Raised when a state with nonpositive density/pressure or non-finite
/// entries is encountered. Carries the offending cell when known.
class UnphysicalState : public std::runtime_error {
public:
  UnphysicalState(const std::string& what, int i = -1, int j = -1)
      : std::runtime_error(what), i_(i), j_(j) {}
  int cell_i() const { return i_; }
  int cell_j() const { return j_; }

private:
  int i_, j_;
};

inline bool is_physical(const Primitive& w) {
  return std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.v) &&
         std::isfinite(w.p) && w.rho > 0.0 && w.p > 0.0;
}

/// p = (gamma-1)*(rho*E - 0.5*rho*(u^2+v^2))
double eos_pressure(const Conserved& u, const GasModel& gas);

/// Same, but rejects non-finite input and nonpositive density with a
/// diagnostic naming the cell.
double eos_pressure_checked(const Conserved& u, const GasModel& gas, int i, int j);

Primitive primitive_from_conserved(const Conserved& u, const GasModel& gas);
Conserved conserved_from_primitive(const Primitive& w, const GasModel& gas);

/// Conversion that flags unphysical results with the cell index instead of
/// returning them.
Primitive primitive_from_conserved_checked(const Conserved& u, const GasModel& gas,
                                           int i, int j);

/// Rotate a global-frame primitive state into the frame of a face with unit
/// normal n:  un = u*nx + v*ny,  ut = -u*ny + v*nx.
FaceState rotate_to_face(const Primitive& w, const UnitNormal& n);

/// Inverse rotation; composes with rotate_to_face to the identity.
Primitive rotate_from_face(const FaceState& wf, const UnitNormal& n);

using Flux4 = std::array<double, 4>;

/// Inviscid flux normal to the face, evaluated from a face-frame state:
/// (rho*un, rho*un^2 + p, rho*un*ut, (rho*E + p)*un).
Flux4 physical_flux(const FaceState& w, const GasModel& gas);

/// Total energy per unit volume of a face-frame state.
double face_total_energy(const FaceState& w, const GasModel& gas);

enum class Averaging { roe, arithmetic };

/// Interface mean state used by the wave speeds and anti-diffusion terms.
/// For Roe averaging, q2 is the squared magnitude of the Roe-averaged
/// velocity. For arithmetic averaging, q2 is the mean of the two squared
/// speeds; this is what makes the HLL-CPS regrouping identity exact.
struct InterfaceAverage {
  double rho = 0.0;
  double un = 0.0;
  double ut = 0.0;
  double a = 0.0;
  double q2 = 0.0;
  Averaging kind = Averaging::roe;
};

InterfaceAverage interface_average(const FaceState& l, const FaceState& r,
                                   Averaging kind, const GasModel& gas);

}  // namespace adflux

#endif
