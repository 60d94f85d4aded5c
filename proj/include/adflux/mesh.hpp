#ifndef ADFLUX_MESH_HPP
#define ADFLUX_MESH_HPP

#include <cstdint>
#include <vector>

#include "adflux/array2d.hpp"
#include "adflux/euler.hpp"

namespace adflux {

struct FaceGeometry {
  UnitNormal n;        // unit normal pointing in the +index direction
  double ds = 0.0;     // face length
};

/// Logically rectangular grid of ni x nj quadrilateral cells. Nodes are
/// stored at the (ni+1) x (nj+1) grid corners. Solid cells (step and corner
/// geometries) are masked; faces between fluid and solid cells act as walls.
class StructuredMesh {
public:
  StructuredMesh() = default;
  StructuredMesh(int ni, int nj);

  int ni() const { return ni_; }
  int nj() const { return nj_; }

  double& xn(int i, int j) { return xn_(i, j); }
  double& yn(int i, int j) { return yn_(i, j); }
  double xn(int i, int j) const { return xn_(i, j); }
  double yn(int i, int j) const { return yn_(i, j); }

  /// Recompute face normals/lengths and cell areas from the node coordinates.
  /// Throws on degenerate (nonpositive-area) fluid cells.
  void update_geometry();

  const FaceGeometry& xface(int i, int j) const { return xf_(i, j); }  // i in [0,ni]
  const FaceGeometry& yface(int i, int j) const { return yf_(i, j); }  // j in [0,nj]
  double area(int i, int j) const { return area_(i, j); }
  double cell_cx(int i, int j) const { return cx_(i, j); }
  double cell_cy(int i, int j) const { return cy_(i, j); }

  bool solid(int i, int j) const { return solid_(i, j) != 0; }
  bool fluid(int i, int j) const { return solid_(i, j) == 0; }
  void set_solid(int i, int j, bool s) { solid_(i, j) = s ? 1 : 0; }
  int fluid_cell_count() const;

  bool periodic_j = false;  // O-grid seam: j wraps around

private:
  int ni_ = 0, nj_ = 0;
  Array2D<double> xn_, yn_;
  Array2D<FaceGeometry> xf_, yf_;
  Array2D<double> area_, cx_, cy_;
  Array2D<std::uint8_t> solid_;
};

/// Uniform rectangle [x0,x1] x [y0,y1].
StructuredMesh make_rect_mesh(int ni, int nj, double x0, double x1, double y0,
                              double y1);

/// Rectangle with one interior node line shifted by +-dy depending on column
/// parity (odd-even decoupling trigger).
StructuredMesh make_perturbed_midline_mesh(int ni, int nj, double x0, double x1,
                                           double y0, double y1, int jline,
                                           double dy);

/// Random interior-node jitter, up to frac of the local spacing (property
/// tests for free-stream preservation on distorted meshes).
StructuredMesh make_distorted_mesh(int ni, int nj, double frac, unsigned seed);

/// Rectangle with the cells inside [sx0,sx1] x [sy0,sy1] masked solid.
StructuredMesh make_masked_rect_mesh(int ni, int nj, double x0, double x1, double y0,
                                     double y1, double sx0, double sx1, double sy0,
                                     double sy1);

/// Body-fitted O-grid around a cylinder of given radius centred at the
/// origin, radially stretched out to router. i runs radially (i=0 at the
/// wall), j runs around the circumference and is periodic.
StructuredMesh make_ogrid_mesh(int nradial, int ncirc, double rbody, double router);

/// Polar half-annulus ahead of a circular-arc blunt nose: i radial from the
/// body (r = rbody) to the inflow boundary (r = router), j along the arc
/// theta in [-pi/2, pi/2] measured from the upstream stagnation line.
StructuredMesh make_bluntbody_mesh(int nradial, int ncirc, double rbody,
                                   double router);

}  // namespace adflux

#endif
