#ifndef ADFLUX_SENSORS_HPP
#define ADFLUX_SENSORS_HPP

#include "adflux/array2d.hpp"

namespace adflux {

/// Face pressure function fp = min(pl/pr, pr/pl)^3, in (0, 1].
double pressure_sensor_face(double pl, double pr);

/// Per-face sensor values on a structured grid of ni x nj cells.
/// x(i,j) lives on the face between cells (i-1,j) and (i,j), i in [0, ni].
/// y(i,j) lives on the face between cells (i,j-1) and (i,j), j in [0, nj].
struct FaceSensorField {
  Array2D<double> x;  // (ni+1) x nj
  Array2D<double> y;  // ni x (nj+1)

  FaceSensorField() = default;
  FaceSensorField(int ni, int nj)
      : x(ni + 1, nj, 0, 1.0), y(ni, nj + 1, 0, 1.0) {}
};

/// Multi-dimensional reduction fp1: each face takes the minimum of its own fp
/// and the four transverse faces of its two adjacent cells. Faces outside the
/// grid are simply left out of the minimum, so boundary stencils shrink
/// rather than being padded with 1.
FaceSensorField pressure_sensor_multidim(const FaceSensorField& fp);

}  // namespace adflux

#endif
