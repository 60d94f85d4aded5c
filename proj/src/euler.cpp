#include "adflux/euler.hpp"

#include <cmath>

namespace adflux {

namespace {

constexpr double kUnitNormalTol = 1e-12;

void require_unit(const UnitNormal& n) {
  const double len2 = n.nx * n.nx + n.ny * n.ny;
  if (std::abs(len2 - 1.0) > 2.0 * kUnitNormalTol)
    throw std::invalid_argument("rotate: face normal is not unit length");
}

}  // namespace

double eos_pressure(const Conserved& u, const GasModel& gas) {
  const double kinetic = 0.5 * (u.mx * u.mx + u.my * u.my) / u.rho;
  return (gas.gamma - 1.0) * (u.e - kinetic);
}

double eos_pressure_checked(const Conserved& u, const GasModel& gas, int i, int j) {
  if (!std::isfinite(u.rho) || !std::isfinite(u.mx) || !std::isfinite(u.my) ||
      !std::isfinite(u.e))
    throw UnphysicalState("eos: non-finite conserved state at cell (" +
                              std::to_string(i) + "," + std::to_string(j) + ")",
                          i, j);
  if (u.rho <= 0.0)
    throw UnphysicalState("eos: nonpositive density at cell (" + std::to_string(i) +
                              "," + std::to_string(j) + ")",
                          i, j);
  return eos_pressure(u, gas);
}

Primitive primitive_from_conserved(const Conserved& u, const GasModel& gas) {
  Primitive w;
  w.rho = u.rho;
  w.u = u.mx / u.rho;
  w.v = u.my / u.rho;
  w.p = (gas.gamma - 1.0) * (u.e - 0.5 * (u.mx * u.mx + u.my * u.my) / u.rho);
  return w;
}

Conserved conserved_from_primitive(const Primitive& w, const GasModel& gas) {
  Conserved u;
  u.rho = w.rho;
  u.mx = w.rho * w.u;
  u.my = w.rho * w.v;
  u.e = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
  return u;
}

Primitive primitive_from_conserved_checked(const Conserved& u, const GasModel& gas,
                                           int i, int j) {
  eos_pressure_checked(u, gas, i, j);
  const Primitive w = primitive_from_conserved(u, gas);
  if (!is_physical(w))
    throw UnphysicalState(
        "conversion: unphysical state (rho=" + std::to_string(w.rho) +
            ", p=" + std::to_string(w.p) + ") at cell (" + std::to_string(i) + "," +
            std::to_string(j) + ")",
        i, j);
  return w;
}

FaceState rotate_to_face(const Primitive& w, const UnitNormal& n) {
  require_unit(n);
  FaceState f;
  f.rho = w.rho;
  f.un = w.u * n.nx + w.v * n.ny;
  f.ut = -w.u * n.ny + w.v * n.nx;
  f.p = w.p;
  return f;
}

Primitive rotate_from_face(const FaceState& wf, const UnitNormal& n) {
  require_unit(n);
  Primitive w;
  w.rho = wf.rho;
  w.u = wf.un * n.nx - wf.ut * n.ny;
  w.v = wf.un * n.ny + wf.ut * n.nx;
  w.p = wf.p;
  return w;
}

double face_total_energy(const FaceState& w, const GasModel& gas) {
  return w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.un * w.un + w.ut * w.ut);
}

Flux4 physical_flux(const FaceState& w, const GasModel& gas) {
  const double rhoE = face_total_energy(w, gas);
  return {w.rho * w.un, w.rho * w.un * w.un + w.p, w.rho * w.un * w.ut,
          (rhoE + w.p) * w.un};
}

InterfaceAverage interface_average(const FaceState& l, const FaceState& r,
                                   Averaging kind, const GasModel& gas) {
  InterfaceAverage avg;
  avg.kind = kind;
  if (kind == Averaging::arithmetic) {
    avg.rho = 0.5 * (l.rho + r.rho);
    avg.un = 0.5 * (l.un + r.un);
    avg.ut = 0.5 * (l.ut + r.ut);
    const double p = 0.5 * (l.p + r.p);
    avg.a = std::sqrt(gas.gamma * p / avg.rho);
    avg.q2 = 0.5 * (l.un * l.un + l.ut * l.ut + r.un * r.un + r.ut * r.ut);
    return avg;
  }
  // Roe average: sqrt(rho)-weighted velocities and enthalpy, with the sound
  // speed recovered from the averaged total enthalpy.
  const double wl = std::sqrt(l.rho);
  const double wr = std::sqrt(r.rho);
  const double inv = 1.0 / (wl + wr);
  avg.rho = wl * wr;
  avg.un = (wl * l.un + wr * r.un) * inv;
  avg.ut = (wl * l.ut + wr * r.ut) * inv;
  const double hl = (face_total_energy(l, gas) + l.p) / l.rho;
  const double hr = (face_total_energy(r, gas) + r.p) / r.rho;
  const double h = (wl * hl + wr * hr) * inv;
  avg.q2 = avg.un * avg.un + avg.ut * avg.ut;
  const double a2 = (gas.gamma - 1.0) * (h - 0.5 * avg.q2);
  if (!(a2 > 0.0))
    throw UnphysicalState("interface_average: negative Roe sound speed squared");
  avg.a = std::sqrt(a2);
  return avg;
}

}  // namespace adflux
