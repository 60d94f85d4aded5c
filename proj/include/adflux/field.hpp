#ifndef ADFLUX_FIELD_HPP
#define ADFLUX_FIELD_HPP

#include "adflux/array2d.hpp"
#include "adflux/euler.hpp"
#include "adflux/mesh.hpp"

namespace adflux {

/// Conserved field on a structured mesh with two ghost layers per side.
struct FieldState {
  static constexpr int kGhost = 2;

  FieldState() = default;
  FieldState(int ni, int nj) : u(ni, nj, kGhost) {}

  int ni() const { return u.ni(); }
  int nj() const { return u.nj(); }

  Array2D<Conserved> u;
};

/// Initialize every fluid cell from a primitive-valued function of the cell
/// center.
template <class F>
void initialize_field(FieldState& field, const StructuredMesh& mesh,
                      const GasModel& gas, F&& primitive_at) {
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j) {
      if (!mesh.fluid(i, j)) continue;
      const Primitive w = primitive_at(mesh.cell_cx(i, j), mesh.cell_cy(i, j));
      field.u(i, j) = conserved_from_primitive(w, gas);
    }
}

}  // namespace adflux

#endif
