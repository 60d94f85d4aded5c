#include "adflux/sensors.hpp"

#include <algorithm>
#include <stdexcept>

namespace adflux {

double pressure_sensor_face(double pl, double pr) {
  if (!(pl > 0.0) || !(pr > 0.0))
    throw std::invalid_argument("pressure_sensor_face: nonpositive pressure");
  const double r = std::min(pl / pr, pr / pl);
  return r * r * r;
}

FaceSensorField pressure_sensor_multidim(const FaceSensorField& fp) {
  const int ni = fp.y.ni();
  const int nj = fp.x.nj();
  FaceSensorField fp1(ni, nj);

  auto ymin = [&](int i, int j, double m) {
    if (i >= 0 && i < ni && j >= 0 && j <= nj) m = std::min(m, fp.y(i, j));
    return m;
  };
  auto xmin = [&](int i, int j, double m) {
    if (i >= 0 && i <= ni && j >= 0 && j < nj) m = std::min(m, fp.x(i, j));
    return m;
  };

  // x-face (i,j): transverse y-faces of cells (i-1,j) and (i,j).
  for (int i = 0; i <= ni; ++i)
    for (int j = 0; j < nj; ++j) {
      double m = fp.x(i, j);
      m = ymin(i - 1, j, m);
      m = ymin(i - 1, j + 1, m);
      m = ymin(i, j, m);
      m = ymin(i, j + 1, m);
      fp1.x(i, j) = m;
    }

  // y-face (i,j): transverse x-faces of cells (i,j-1) and (i,j).
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j <= nj; ++j) {
      double m = fp.y(i, j);
      m = xmin(i, j - 1, m);
      m = xmin(i + 1, j - 1, m);
      m = xmin(i, j, m);
      m = xmin(i + 1, j, m);
      fp1.y(i, j) = m;
    }

  return fp1;
}

}  // namespace adflux
