#ifndef ADFLUX_SNAPSHOT_HPP
#define ADFLUX_SNAPSHOT_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "adflux/field.hpp"

namespace adflux {

/// Provenance stamped into the header line of every emitted file.
struct OutputMeta {
  std::string case_name;
  std::string scheme;
  long step = 0;
  double t = 0.0;
  unsigned seed = 0;
};

std::string output_header_line(const OutputMeta& meta);

/// Shortest round-trippable decimal form; locale independent and bit-stable
/// across runs with identical inputs.
std::string format_g17(double v);

/// One row per cell: i, j, x, y, rho, u, v, p, mach (and cp when a
/// freestream reference is given).
void write_snapshot_csv(const std::string& path, const FieldState& field,
                        const StructuredMesh& mesh, const GasModel& gas,
                        const OutputMeta& meta,
                        const std::optional<Primitive>& freestream = {});

/// Legacy ASCII VTK structured grid with point coordinates and the cell
/// scalars rho, u, v, p, mach (and cp when defined).
void write_snapshot_vtk(const std::string& path, const FieldState& field,
                        const StructuredMesh& mesh, const GasModel& gas,
                        const OutputMeta& meta,
                        const std::optional<Primitive>& freestream = {});

/// Minimal CSV table writer with the provenance header.
class MetricsWriter {
public:
  MetricsWriter(const std::string& path, const OutputMeta& meta,
                const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row_with_label(const std::string& label, const std::vector<double>& values);

private:
  std::ofstream out_;
  std::size_t ncols_;
};

}  // namespace adflux

#endif
