#include "adflux/cases.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adflux/config.hpp"
#include "adflux/version.hpp"

namespace adflux {

std::string case_directory() {
  if (const char* env = std::getenv("ADFLUX_CASE_DIR")) return env;
  return kDefaultCaseDir;
}

std::vector<std::string> known_cases() {
  return {"sod",          "severe_shock_tube", "planar_shock",
          "dmr",          "forward_step",      "blunt_body",
          "supersonic_corner", "low_mach_cylinder"};
}

Primitive moving_shock_post_state(const Primitive& pre, double mach_s,
                                  const GasModel& gas) {
  const double g = gas.gamma;
  const double a1 = gas.sound_speed(pre.rho, pre.p);
  const double m2 = mach_s * mach_s;
  const double p2 = pre.p * (1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0));
  const double rho2 = pre.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
  const double u2 = pre.u + 2.0 * a1 / (g + 1.0) * (m2 - 1.0) / mach_s;
  return {rho2, u2, pre.v, p2};
}

namespace {

Primitive primitive_from_values(const std::vector<double>& v,
                                const std::string& key) {
  if (v.size() != 4)
    throw ConfigError("case key '" + key + "' must hold 4 numbers (rho u v p)");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

CaseDefinition parse_case_text(
    const std::string& text, const std::string& origin,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  KeyValueMap kv = KeyValueMap::parse(text, origin);
  for (const auto& [k, v] : overrides) kv.set(k, v);

  CaseDefinition c;
  c.name = kv.require_string("name");
  c.title = kv.get_string("title", c.name);

  c.mesh_kind = kv.require_string("mesh.kind");
  c.ni = static_cast<int>(kv.get_long("mesh.ni", 0));
  c.nj = static_cast<int>(kv.get_long("mesh.nj", 0));
  c.x0 = kv.get_double("mesh.x0", 0.0);
  c.x1 = kv.get_double("mesh.x1", 1.0);
  c.y0 = kv.get_double("mesh.y0", 0.0);
  c.y1 = kv.get_double("mesh.y1", 1.0);
  c.midline_j = static_cast<int>(kv.get_long("mesh.midline_j", c.nj / 2));
  c.midline_dy = kv.get_double("mesh.midline_dy", 0.0);
  c.mask_x0 = kv.get_double("mesh.mask_x0", 0.0);
  c.mask_x1 = kv.get_double("mesh.mask_x1", 0.0);
  c.mask_y0 = kv.get_double("mesh.mask_y0", 0.0);
  c.mask_y1 = kv.get_double("mesh.mask_y1", 0.0);
  c.body_radius = kv.get_double("mesh.body_radius", 0.0);
  c.outer_radius = kv.get_double("mesh.outer_radius", 0.0);

  c.init_kind = kv.require_string("init.kind");
  if (kv.has("init.state"))
    c.init_uniform = primitive_from_values(kv.get_doubles("init.state"), "init.state");
  if (kv.has("init.left"))
    c.init_left = primitive_from_values(kv.get_doubles("init.left"), "init.left");
  if (kv.has("init.right"))
    c.init_right = primitive_from_values(kv.get_doubles("init.right"), "init.right");
  c.split_x = kv.get_double("init.split_x", 0.0);

  c.shock_mach = kv.get_double("shock.mach", 0.0);
  c.shock_angle_deg = kv.get_double("shock.angle_deg", 90.0);
  c.shock_foot_x = kv.get_double("shock.foot_x", 0.0);

  c.bc_layout = kv.require_string("bc.layout");

  c.t_end = kv.get_optional_double("stop.t_end");
  c.t_end_alt = kv.get_optional_double("stop.t_end_alt");
  c.max_iters = kv.get_optional_long("stop.max_iters");
  if (!c.t_end && !c.max_iters)
    throw ConfigError(origin + ": case defines no stop rule");

  c.cfl = kv.get_double("cfl", 0.8);
  c.order = static_cast<int>(kv.get_long("order", 1));
  c.limiter = kv.get_string("limiter", "van_leer");
  c.diagnostics = kv.get_words("diagnostics");
  for (const auto& [k, v] : kv.take_prefixed("ref."))
    c.refs[k] = std::stod(v);

  kv.finalize();

  if (c.ni < 1 || c.nj < 1)
    throw ConfigError(origin + ": mesh.ni/mesh.nj must be positive");
  return c;
}

CaseDefinition build_case(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  bool known = false;
  for (const auto& n : known_cases()) known = known || n == name;
  if (!known) {
    std::ostringstream msg;
    msg << "unknown case '" << name << "'; valid cases:";
    for (const auto& n : known_cases()) msg << " " << n;
    throw ConfigError(msg.str());
  }
  const std::string path = case_directory() + "/" + name + ".cfg";
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open case file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_case_text(ss.str(), path, overrides);
}

StructuredMesh generate_grid(const CaseDefinition& c) {
  if (c.mesh_kind == "rect")
    return make_rect_mesh(c.ni, c.nj, c.x0, c.x1, c.y0, c.y1);
  if (c.mesh_kind == "perturbed_midline")
    return make_perturbed_midline_mesh(c.ni, c.nj, c.x0, c.x1, c.y0, c.y1,
                                       c.midline_j, c.midline_dy);
  if (c.mesh_kind == "masked_rect")
    return make_masked_rect_mesh(c.ni, c.nj, c.x0, c.x1, c.y0, c.y1, c.mask_x0,
                                 c.mask_x1, c.mask_y0, c.mask_y1);
  if (c.mesh_kind == "ogrid")
    return make_ogrid_mesh(c.ni, c.nj, c.body_radius, c.outer_radius);
  if (c.mesh_kind == "blunt")
    return make_bluntbody_mesh(c.ni, c.nj, c.body_radius, c.outer_radius);
  throw ConfigError("unknown mesh kind '" + c.mesh_kind + "'");
}

FieldState initial_field(const CaseDefinition& c, const StructuredMesh& mesh,
                         const GasModel& gas) {
  FieldState f(mesh.ni(), mesh.nj());
  // Benign filler for solid cells; their values are never read.
  for (int i = 0; i < mesh.ni(); ++i)
    for (int j = 0; j < mesh.nj(); ++j)
      f.u(i, j) = conserved_from_primitive({1.0, 0.0, 0.0, 1.0}, gas);

  if (c.init_kind == "uniform") {
    initialize_field(f, mesh, gas, [&](double, double) { return c.init_uniform; });
  } else if (c.init_kind == "two_state_x") {
    initialize_field(f, mesh, gas, [&](double x, double) {
      return x < c.split_x ? c.init_left : c.init_right;
    });
  } else if (c.init_kind == "moving_shock_x") {
    const Primitive post = moving_shock_post_state(c.init_uniform, c.shock_mach, gas);
    initialize_field(f, mesh, gas, [&](double x, double) {
      return x < c.split_x ? post : c.init_uniform;
    });
  } else if (c.init_kind == "oblique_shock") {
    // Shock line through (shock_foot_x, y0) at the given angle; post-shock
    // state fills the region behind it.
    const double g = gas.gamma;
    const double a1 = gas.sound_speed(c.init_uniform.rho, c.init_uniform.p);
    const double m2 = c.shock_mach * c.shock_mach;
    const double up = 2.0 * a1 / (g + 1.0) * (m2 - 1.0) / c.shock_mach;
    const double ang = c.shock_angle_deg * M_PI / 180.0;
    // propagation direction of the shock (unit normal to the front)
    const double nx = std::sin(ang), ny = -std::cos(ang);
    const Primitive post = {
        c.init_uniform.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0),
        c.init_uniform.u + up * nx, c.init_uniform.v + up * ny,
        c.init_uniform.p * (1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0))};
    const double tan_a = std::tan(ang);
    initialize_field(f, mesh, gas, [&](double x, double y) {
      const double x_front = c.shock_foot_x + (y - c.y0) / tan_a;
      return x < x_front ? post : c.init_uniform;
    });
  } else {
    throw ConfigError("unknown init kind '" + c.init_kind + "'");
  }
  return f;
}

BoundarySpec boundary_spec(const CaseDefinition& c, const StructuredMesh& mesh,
                           const GasModel& gas) {
  BoundarySpec bc;
  const auto zero_grad = BoundaryPatch{BcType::zero_gradient_outflow, 0, -1, {}};
  const auto wall = BoundaryPatch{BcType::reflective_wall, 0, -1, {}};

  if (c.bc_layout == "open") {
    bc.set(Side::imin, zero_grad);
    bc.set(Side::imax, zero_grad);
    bc.set(Side::jmin, zero_grad);
    bc.set(Side::jmax, zero_grad);
  } else if (c.bc_layout == "planar_channel") {
    const Primitive post = moving_shock_post_state(c.init_uniform, c.shock_mach, gas);
    bc.set(Side::imin, {BcType::prescribed_post_shock, 0, -1, post});
    bc.set(Side::imax, zero_grad);
    bc.set(Side::jmin, wall);
    bc.set(Side::jmax, wall);
  } else if (c.bc_layout == "dmr") {
    const double g = gas.gamma;
    const double a1 = gas.sound_speed(c.init_uniform.rho, c.init_uniform.p);
    const double m2 = c.shock_mach * c.shock_mach;
    const double up = 2.0 * a1 / (g + 1.0) * (m2 - 1.0) / c.shock_mach;
    const double ang = c.shock_angle_deg * M_PI / 180.0;
    const Primitive post = {
        c.init_uniform.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0),
        c.init_uniform.u + up * std::sin(ang), c.init_uniform.v - up * std::cos(ang),
        c.init_uniform.p * (1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0))};
    bc.set(Side::imin, {BcType::prescribed_post_shock, 0, -1, post});
    bc.set(Side::imax, zero_grad);
    // Post-shock ahead of the shock foot on the bottom, reflecting wall after.
    int foot_cells = 0;
    while (foot_cells < mesh.ni() && mesh.cell_cx(foot_cells, 0) < c.shock_foot_x)
      ++foot_cells;
    bc.set(Side::jmin, {BcType::prescribed_post_shock, 0, foot_cells, post});
    bc.add(Side::jmin, {BcType::reflective_wall, foot_cells, -1, {}});
    bc.set(Side::jmax, {BcType::moving_shock_top, 0, -1, {}});
    bc.shock.x0 = c.shock_foot_x;
    bc.shock.angle_rad = ang;
    bc.shock.speed = c.shock_mach * a1;
    bc.shock.pre = c.init_uniform;
    bc.shock.post = post;
  } else if (c.bc_layout == "forward_step") {
    bc.set(Side::imin, {BcType::supersonic_inflow, 0, -1, c.init_uniform});
    bc.set(Side::imax, zero_grad);
    bc.set(Side::jmin, wall);
    bc.set(Side::jmax, wall);
  } else if (c.bc_layout == "corner") {
    const Primitive post = moving_shock_post_state(c.init_uniform, c.shock_mach, gas);
    bc.set(Side::imin, {BcType::supersonic_inflow, 0, -1, post});
    bc.set(Side::imax, zero_grad);
    bc.set(Side::jmin, {BcType::extrapolation, 0, -1, {}});
    bc.set(Side::jmax, wall);
  } else if (c.bc_layout == "blunt") {
    bc.set(Side::imin, wall);  // the body
    bc.set(Side::imax, {BcType::supersonic_inflow, 0, -1, c.init_uniform});
    bc.set(Side::jmin, zero_grad);
    bc.set(Side::jmax, zero_grad);
  } else if (c.bc_layout == "cylinder") {
    bc.set(Side::imin, wall);
    bc.set(Side::imax, {BcType::far_field, 0, -1, c.init_uniform});
    // j is periodic around the O-grid seam.
  } else {
    throw ConfigError("unknown bc layout '" + c.bc_layout + "'");
  }
  return bc;
}

}  // namespace adflux
