#ifndef ADFLUX_CASES_HPP
#define ADFLUX_CASES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adflux/boundary.hpp"
#include "adflux/field.hpp"
#include "adflux/mesh.hpp"

namespace adflux {

/// A canonical test case: grid recipe, initial field, boundary layout, stop
/// rule, diagnostics to emit and reference values. Loaded from the
/// human-readable case files shipped in cases/.
struct CaseDefinition {
  std::string name;
  std::string title;

  // Mesh recipe.
  std::string mesh_kind;  // rect | perturbed_midline | masked_rect | ogrid | blunt
  int ni = 0, nj = 0;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  int midline_j = 0;
  double midline_dy = 0;
  double mask_x0 = 0, mask_x1 = 0, mask_y0 = 0, mask_y1 = 0;
  double body_radius = 0, outer_radius = 0;

  // Initial field.
  std::string init_kind;  // uniform | two_state_x | moving_shock_x | oblique_shock
  Primitive init_uniform{};
  Primitive init_left{}, init_right{};
  double split_x = 0;

  // Shock parameters for cases that derive post-shock data.
  double shock_mach = 0;
  double shock_angle_deg = 90.0;
  double shock_foot_x = 0;

  std::string bc_layout;  // open | planar_channel | dmr | forward_step | corner
                          // | blunt | cylinder

  std::optional<double> t_end;
  std::optional<double> t_end_alt;  // secondary published value, where one exists
  std::optional<long> max_iters;
  double cfl = 0.8;
  int order = 1;
  std::string limiter = "van_leer";

  std::map<std::string, double> refs;
  std::vector<std::string> diagnostics;
};

/// Directory the case files are read from: ADFLUX_CASE_DIR when set, else
/// the location recorded at configure time.
std::string case_directory();

std::vector<std::string> known_cases();

/// Load a preset by name and apply key overrides (same keys as the file).
CaseDefinition build_case(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& overrides = {});

CaseDefinition parse_case_text(const std::string& text, const std::string& origin,
                               const std::vector<std::pair<std::string, std::string>>&
                                   overrides = {});

StructuredMesh generate_grid(const CaseDefinition& c);
FieldState initial_field(const CaseDefinition& c, const StructuredMesh& mesh,
                         const GasModel& gas);
BoundarySpec boundary_spec(const CaseDefinition& c, const StructuredMesh& mesh,
                           const GasModel& gas);

/// State behind a normal shock moving with Mach number mach_s into the given
/// quiescent-or-moving pre state (velocity along +x).
Primitive moving_shock_post_state(const Primitive& pre, double mach_s,
                                  const GasModel& gas);

}  // namespace adflux

#endif
