#include "adflux/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adflux {

double odd_even_asymmetry(const FieldState& field, const StructuredMesh& mesh,
                          const GasModel& gas, double rho_ref) {
  double worst = 0.0;
  for (int i = 0; i < mesh.ni(); ++i) {
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) continue;
      const double rho = field.u(i, j).rho;
      sum += rho;
      sum2 += rho * rho;
      ++n;
    }
    if (n < 2) continue;
    const double mean = sum / n;
    const double var = std::max(0.0, sum2 / n - mean * mean);
    worst = std::max(worst, std::sqrt(var));
  }
  return worst / rho_ref;
}

namespace {

int stagnation_row(const StructuredMesh& mesh) {
  // Row whose centerline is nearest y = 0 at the body; grids built here are
  // symmetric so this is nj/2 - 1 and nj/2.
  int best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < mesh.nj(); ++j) {
    const double d = std::abs(mesh.cell_cy(0, j));
    if (d < dist) {
      dist = d;
      best = j;
    }
  }
  return best;
}

}  // namespace

std::vector<ProfileSample> centerline_pressure(const FieldState& field,
                                               const StructuredMesh& mesh,
                                               const GasModel& gas) {
  const int j0 = stagnation_row(mesh);
  int j1 = j0;
  double best = std::numeric_limits<double>::infinity();
  for (int cand : {j0 - 1, j0 + 1}) {
    if (cand < 0 || cand >= mesh.nj()) continue;
    const double d = std::abs(mesh.cell_cy(0, cand));
    if (d < best) {
      best = d;
      j1 = cand;
    }
  }
  std::vector<ProfileSample> out;
  out.reserve(mesh.ni());
  for (int i = 0; i < mesh.ni(); ++i) {
    const double pa = primitive_from_conserved(field.u(i, j0), gas).p;
    const double pb = primitive_from_conserved(field.u(i, j1), gas).p;
    out.push_back({mesh.cell_cx(i, j0), 0.5 * (pa + pb)});
  }
  return out;
}

double stagnation_point_pressure(const FieldState& field, const StructuredMesh& mesh,
                                 const GasModel& gas) {
  return centerline_pressure(field, mesh, gas).front().value;
}

double post_shock_centerline_pressure(const FieldState& field,
                                      const StructuredMesh& mesh,
                                      const GasModel& gas) {
  const std::vector<ProfileSample> p = centerline_pressure(field, mesh, gas);
  // Walk from the far field (outer end) toward the body; the shock is the
  // steepest rise. i = 0 is the body.
  int ishock = -1;
  double steepest = 0.0;
  for (int i = static_cast<int>(p.size()) - 1; i > 0; --i) {
    const double jump = p[i - 1].value - p[i].value;
    if (jump > steepest) {
      steepest = jump;
      ishock = i;
    }
  }
  if (ishock < 0) throw std::runtime_error("post-shock pressure: no front found");
  // Step downstream (toward the body) until consecutive samples change by
  // less than a tenth of the captured jump: that sample has left the
  // numerical shock transition.
  int k = ishock - 1;
  while (k > 0 && p[k - 1].value - p[k].value > 0.1 * steepest) --k;
  return p[k].value;
}

Array2D<double> cp_field(const FieldState& field, const StructuredMesh& mesh,
                         const GasModel& gas, const Primitive& freestream) {
  const double qinf2 = freestream.u * freestream.u + freestream.v * freestream.v;
  const double denom = 0.5 * freestream.rho * qinf2;
  Array2D<double> cp(mesh.ni(), mesh.nj());
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) {
        cp(i, j) = 0.0;
        continue;
      }
      const double p = primitive_from_conserved(field.u(i, j), gas).p;
      cp(i, j) = (p - freestream.p) / denom;
    }
  return cp;
}

double pressure_fluctuation(const FieldState& field, const StructuredMesh& mesh,
                            const GasModel& gas) {
  double pmax = -std::numeric_limits<double>::infinity();
  double pmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) continue;
      const double p = primitive_from_conserved(field.u(i, j), gas).p;
      pmax = std::max(pmax, p);
      pmin = std::min(pmin, p);
    }
  return (pmax - pmin) / pmax;
}

double shock_kink_metric(const FieldState& field, const StructuredMesh& mesh,
                         const GasModel& gas, double y_max, double rho_mid) {
  (void)gas;
  std::vector<double> xs, ys;
  const double dx = (mesh.cell_cx(1, 0) - mesh.cell_cx(0, 0));
  for (int j = 0; j < mesh.nj(); ++j) {
    if (mesh.cell_cy(0, j) > y_max) continue;
    // Scan from the right for the first crossing above the mid density.
    double xfront = std::numeric_limits<double>::quiet_NaN();
    for (int i = mesh.ni() - 1; i > 0; --i) {
      const double a = field.u(i, j).rho;
      const double b = field.u(i - 1, j).rho;
      if (a < rho_mid && b >= rho_mid) {
        const double frac = (rho_mid - a) / (b - a);
        xfront = mesh.cell_cx(i, j) - frac * dx;
        break;
      }
    }
    if (std::isfinite(xfront)) {
      xs.push_back(xfront);
      ys.push_back(mesh.cell_cy(0, j));
    }
  }
  if (xs.size() < 3) return 0.0;
  // Least-squares line x(y), then the largest residual in cell units.
  const double n = static_cast<double>(xs.size());
  double sy = 0, sx = 0, syy = 0, syx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sy += ys[k];
    sx += xs[k];
    syy += ys[k] * ys[k];
    syx += ys[k] * xs[k];
  }
  const double denom = n * syy - sy * sy;
  const double slope = denom != 0.0 ? (n * syx - sy * sx) / denom : 0.0;
  const double icept = (sx - slope * sy) / n;
  double worst = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k)
    worst = std::max(worst, std::abs(xs[k] - (icept + slope * ys[k])));
  return worst / dx;
}

ConservedTotals conserved_totals(const FieldState& field,
                                 const StructuredMesh& mesh) {
  ConservedTotals t;
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) continue;
      t.mass += field.u(i, j).rho * mesh.area(i, j);
      t.energy += field.u(i, j).e * mesh.area(i, j);
    }
  return t;
}

double l1_density_error(const FieldState& field, const StructuredMesh& mesh,
                        const std::vector<double>& rho_exact) {
  if (static_cast<int>(rho_exact.size()) != mesh.ni())
    throw std::invalid_argument("l1_density_error: size mismatch");
  double err = 0.0;
  for (int i = 0; i < mesh.ni(); ++i)
    err += std::abs(field.u(i, 0).rho - rho_exact[i]);
  return err / mesh.ni();
}

}  // namespace adflux
