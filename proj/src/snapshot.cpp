#include "adflux/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "adflux/version.hpp"

namespace adflux {

std::string output_header_line(const OutputMeta& meta) {
  std::string s = "# adflux build=" + std::string(kBuildId);
  if (!meta.case_name.empty()) s += " case=" + meta.case_name;
  if (!meta.scheme.empty()) s += " scheme=" + meta.scheme;
  s += " step=" + std::to_string(meta.step);
  s += " t=" + format_g17(meta.t);
  s += " seed=" + std::to_string(meta.seed);
  s += " units=nondimensional";
  return s;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

}  // namespace

void write_snapshot_csv(const std::string& path, const FieldState& field,
                        const StructuredMesh& mesh, const GasModel& gas,
                        const OutputMeta& meta,
                        const std::optional<Primitive>& freestream) {
  std::ofstream out = open_or_throw(path);
  out << output_header_line(meta) << "\n";
  out << "i,j,x,y,rho,u,v,p,mach";
  if (freestream) out << ",cp";
  out << "\n";
  const double qinf2 =
      freestream ? freestream->u * freestream->u + freestream->v * freestream->v : 0.0;
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) continue;
      const Primitive w = primitive_from_conserved(field.u(i, j), gas);
      const double mach =
          std::sqrt(w.u * w.u + w.v * w.v) / gas.sound_speed(w.rho, w.p);
      out << i << ',' << j << ',' << format_g17(mesh.cell_cx(i, j)) << ','
          << format_g17(mesh.cell_cy(i, j)) << ',' << format_g17(w.rho) << ','
          << format_g17(w.u) << ',' << format_g17(w.v) << ',' << format_g17(w.p)
          << ',' << format_g17(mach);
      if (freestream)
        out << ',' << format_g17((w.p - freestream->p) /
                                 (0.5 * freestream->rho * qinf2));
      out << "\n";
    }
}

void write_snapshot_vtk(const std::string& path, const FieldState& field,
                        const StructuredMesh& mesh, const GasModel& gas,
                        const OutputMeta& meta,
                        const std::optional<Primitive>& freestream) {
  std::ofstream out = open_or_throw(path);
  const int ni = mesh.ni(), nj = mesh.nj();
  out << "# vtk DataFile Version 3.0\n";
  out << output_header_line(meta) << "\n";
  out << "ASCII\nDATASET STRUCTURED_GRID\n";
  out << "DIMENSIONS " << ni + 1 << ' ' << nj + 1 << " 1\n";
  out << "POINTS " << (ni + 1) * (nj + 1) << " double\n";
  for (int j = 0; j <= nj; ++j)
    for (int i = 0; i <= ni; ++i)
      out << format_g17(mesh.xn(i, j)) << ' ' << format_g17(mesh.yn(i, j)) << " 0\n";
  out << "CELL_DATA " << ni * nj << "\n";

  auto scalar = [&](const std::string& name, auto get) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < nj; ++j)
      for (int i = 0; i < ni; ++i) {
        if (!mesh.fluid(i, j)) {
          out << "0\n";
          continue;
        }
        const Primitive w = primitive_from_conserved(field.u(i, j), gas);
        out << format_g17(get(w)) << "\n";
      }
  };
  scalar("rho", [](const Primitive& w) { return w.rho; });
  scalar("u", [](const Primitive& w) { return w.u; });
  scalar("v", [](const Primitive& w) { return w.v; });
  scalar("p", [](const Primitive& w) { return w.p; });
  scalar("mach", [&](const Primitive& w) {
    return std::sqrt(w.u * w.u + w.v * w.v) / gas.sound_speed(w.rho, w.p);
  });
  if (freestream) {
    const double denom =
        0.5 * freestream->rho *
        (freestream->u * freestream->u + freestream->v * freestream->v);
    scalar("cp", [&](const Primitive& w) { return (w.p - freestream->p) / denom; });
  }
}

MetricsWriter::MetricsWriter(const std::string& path, const OutputMeta& meta,
                             const std::vector<std::string>& columns)
    : out_(path), ncols_(columns.size()) {
  if (!out_) throw std::runtime_error("cannot write '" + path + "'");
  out_ << output_header_line(meta) << "\n";
  for (std::size_t k = 0; k < columns.size(); ++k)
    out_ << columns[k] << (k + 1 < columns.size() ? "," : "\n");
}

void MetricsWriter::row(const std::vector<double>& values) {
  if (values.size() != ncols_)
    throw std::invalid_argument("metrics row: column count mismatch");
  for (std::size_t k = 0; k < values.size(); ++k)
    out_ << format_g17(values[k]) << (k + 1 < values.size() ? "," : "\n");
  out_.flush();
}

void MetricsWriter::row_with_label(const std::string& label,
                                   const std::vector<double>& values) {
  if (values.size() + 1 != ncols_)
    throw std::invalid_argument("metrics row: column count mismatch");
  out_ << label;
  for (const double v : values) out_ << ',' << format_g17(v);
  out_ << "\n";
  out_.flush();
}

}  // namespace adflux
