#include "adflux/mesh.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace adflux {

StructuredMesh::StructuredMesh(int ni, int nj)
    : ni_(ni), nj_(nj),
      xn_(ni + 1, nj + 1), yn_(ni + 1, nj + 1),
      xf_(ni + 1, nj), yf_(ni, nj + 1),
      area_(ni, nj), cx_(ni, nj), cy_(ni, nj), solid_(ni, nj, 0, 0) {
  if (ni < 1 || nj < 1) throw std::invalid_argument("mesh: empty grid");
}

void StructuredMesh::update_geometry() {
  // x-faces connect node (i,j) to (i,j+1); normal points toward +i.
  for (int i = 0; i <= ni_; ++i)
    for (int j = 0; j < nj_; ++j) {
      const double dx = xn_(i, j + 1) - xn_(i, j);
      const double dy = yn_(i, j + 1) - yn_(i, j);
      const double ds = std::hypot(dx, dy);
      if (ds <= 0.0) throw std::runtime_error("mesh: degenerate x-face");
      xf_(i, j) = {{dy / ds, -dx / ds}, ds};
    }
  // y-faces connect node (i,j) to (i+1,j); normal points toward +j.
  for (int i = 0; i < ni_; ++i)
    for (int j = 0; j <= nj_; ++j) {
      const double dx = xn_(i + 1, j) - xn_(i, j);
      const double dy = yn_(i + 1, j) - yn_(i, j);
      const double ds = std::hypot(dx, dy);
      if (ds <= 0.0) throw std::runtime_error("mesh: degenerate y-face");
      yf_(i, j) = {{-dy / ds, dx / ds}, ds};
    }
  for (int i = 0; i < ni_; ++i)
    for (int j = 0; j < nj_; ++j) {
      const double x1 = xn_(i, j), y1 = yn_(i, j);
      const double x2 = xn_(i + 1, j), y2 = yn_(i + 1, j);
      const double x3 = xn_(i + 1, j + 1), y3 = yn_(i + 1, j + 1);
      const double x4 = xn_(i, j + 1), y4 = yn_(i, j + 1);
      const double a = 0.5 * ((x1 * y2 - x2 * y1) + (x2 * y3 - x3 * y2) +
                              (x3 * y4 - x4 * y3) + (x4 * y1 - x1 * y4));
      if (fluid(i, j) && a <= 0.0)
        throw std::runtime_error("mesh: nonpositive cell area");
      area_(i, j) = a;
      cx_(i, j) = 0.25 * (x1 + x2 + x3 + x4);
      cy_(i, j) = 0.25 * (y1 + y2 + y3 + y4);
    }
}

int StructuredMesh::fluid_cell_count() const {
  int n = 0;
  for (int i = 0; i < ni_; ++i)
    for (int j = 0; j < nj_; ++j)
      if (fluid(i, j)) ++n;
  return n;
}

StructuredMesh make_rect_mesh(int ni, int nj, double x0, double x1, double y0,
                              double y1) {
  StructuredMesh m(ni, nj);
  for (int i = 0; i <= ni; ++i)
    for (int j = 0; j <= nj; ++j) {
      m.xn(i, j) = x0 + (x1 - x0) * i / ni;
      m.yn(i, j) = y0 + (y1 - y0) * j / nj;
    }
  m.update_geometry();
  return m;
}

StructuredMesh make_perturbed_midline_mesh(int ni, int nj, double x0, double x1,
                                           double y0, double y1, int jline,
                                           double dy) {
  StructuredMesh m = make_rect_mesh(ni, nj, x0, x1, y0, y1);
  for (int i = 0; i <= ni; ++i)
    m.yn(i, jline) += (i % 2 == 0) ? dy : -dy;
  m.update_geometry();
  return m;
}

StructuredMesh make_distorted_mesh(int ni, int nj, double frac, unsigned seed) {
  StructuredMesh m = make_rect_mesh(ni, nj, 0.0, 1.0, 0.0, 1.0);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-frac, frac);
  const double hx = 1.0 / ni, hy = 1.0 / nj;
  for (int i = 1; i < ni; ++i)
    for (int j = 1; j < nj; ++j) {
      m.xn(i, j) += u(rng) * hx;
      m.yn(i, j) += u(rng) * hy;
    }
  m.update_geometry();
  return m;
}

StructuredMesh make_masked_rect_mesh(int ni, int nj, double x0, double x1, double y0,
                                     double y1, double sx0, double sx1, double sy0,
                                     double sy1) {
  StructuredMesh m = make_rect_mesh(ni, nj, x0, x1, y0, y1);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j) {
      const double cx = m.cell_cx(i, j);
      const double cy = m.cell_cy(i, j);
      if (cx > sx0 && cx < sx1 && cy > sy0 && cy < sy1) m.set_solid(i, j, true);
    }
  return m;
}

StructuredMesh make_ogrid_mesh(int nradial, int ncirc, double rbody, double router) {
  StructuredMesh m(nradial, ncirc);
  const double stretch = std::log(router / rbody);
  for (int i = 0; i <= nradial; ++i) {
    const double r = rbody * std::exp(stretch * i / nradial);
    for (int j = 0; j <= ncirc; ++j) {
      // Seam: the j = 0 and j = ncirc node lines coincide.
      const double th = 2.0 * M_PI * j / ncirc;
      m.xn(i, j) = r * std::cos(th);
      m.yn(i, j) = r * std::sin(th);
    }
  }
  m.periodic_j = true;
  m.update_geometry();
  return m;
}

StructuredMesh make_bluntbody_mesh(int nradial, int ncirc, double rbody,
                                   double router) {
  StructuredMesh m(nradial, ncirc);
  for (int i = 0; i <= nradial; ++i) {
    const double r = rbody + (router - rbody) * i / nradial;
    for (int j = 0; j <= ncirc; ++j) {
      // theta = 0 on the upstream stagnation line (-x axis); j sweeps the
      // front half of the body from top to bottom to keep cells
      // counterclockwise.
      const double th = 0.5 * M_PI - M_PI * j / ncirc;
      m.xn(i, j) = -r * std::cos(th);
      m.yn(i, j) = r * std::sin(th);
    }
  }
  m.update_geometry();
  return m;
}

}  // namespace adflux
