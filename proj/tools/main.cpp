// Command-line front end: case runs, the stability sweep, 1D validation
// against the exact Riemann solution, the saw-tooth perturbation table and
// the low-Mach pressure-fluctuation sweep.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "adflux/analysis.hpp"
#include "adflux/config.hpp"
#include "adflux/diagnostics.hpp"
#include "adflux/exact_riemann.hpp"
#include "adflux/runner.hpp"
#include "adflux/snapshot.hpp"
#include "adflux/version.hpp"

namespace fs = std::filesystem;
using namespace adflux;

namespace {

const GasModel gas;

std::vector<std::pair<std::string, std::string>> parse_overrides(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--override expects key=value, got '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

std::optional<Primitive> case_freestream(const CaseDefinition& def) {
  if (def.bc_layout == "cylinder" || def.bc_layout == "blunt")
    return def.init_uniform;
  return std::nullopt;
}

void write_case_outputs(const std::string& outdir, const CaseRun& run,
                        const std::string& scheme_name_str, unsigned seed,
                        const std::string& format) {
  fs::create_directories(outdir);
  OutputMeta meta{run.def.name, scheme_name_str, run.stats.steps, run.stats.t, seed};
  const std::string base = outdir + "/" + run.def.name + "_" + scheme_name_str;
  if (format == "vtk_legacy")
    write_snapshot_vtk(base + "_final.vtk", run.field, run.mesh, gas, meta,
                       case_freestream(run.def));
  else
    write_snapshot_csv(base + "_final.csv", run.field, run.mesh, gas, meta,
                       case_freestream(run.def));

  {
    MetricsWriter hist(base + "_residual.csv", meta, {"iter", "density_residual_l2"});
    for (std::size_t k = 0; k < run.stats.density_residual_l2.size(); ++k)
      hist.row({static_cast<double>(k + 1), run.stats.density_residual_l2[k]});
  }

  MetricsWriter metrics(base + "_metrics.csv", meta, {"name", "value"});
  auto emit = [&](const std::string& name, double v) {
    metrics.row_with_label(name, {v});
  };
  emit("steps", static_cast<double>(run.stats.steps));
  emit("t_final", run.stats.t);
  emit("recon_fallbacks", static_cast<double>(run.stats.residual_stats.recon_fallbacks));
  emit("floor_hits", static_cast<double>(run.stats.residual_stats.floor_hits));
  for (const std::string& diag : run.def.diagnostics) {
    if (diag == "odd_even") {
      const double ref = run.def.refs.count("post_shock_rho")
                             ? run.def.refs.at("post_shock_rho")
                             : 1.0;
      emit("odd_even_asymmetry",
           odd_even_asymmetry(run.field, run.mesh, gas, ref));
    } else if (diag == "p_fluc") {
      emit("p_fluc", pressure_fluctuation(run.field, run.mesh, gas));
    } else if (diag == "stagnation") {
      emit("stagnation_pressure",
           stagnation_point_pressure(run.field, run.mesh, gas));
      emit("post_shock_pressure",
           post_shock_centerline_pressure(run.field, run.mesh, gas));
    } else if (diag == "shock_kink") {
      emit("shock_kink_cells",
           shock_kink_metric(run.field, run.mesh, gas, 0.15, 4.0));
    } else if (diag == "centerline") {
      MetricsWriter prof(base + "_centerline.csv", meta, {"x", "p"});
      for (const auto& s : centerline_pressure(run.field, run.mesh, gas))
        prof.row({s.x, s.value});
    }
    // riemann_compare / monotonicity are served by the riemann1d subcommand.
  }
  std::cout << "wrote " << base << "_{final,residual,metrics}.*\n";
}

SchemeConfig scheme_config_from(const std::string& name,
                                std::optional<double> force_delta_n,
                                std::optional<double> force_fp1) {
  SchemeConfig cfg;
  cfg.scheme = scheme_from_name(name);
  cfg.force_delta_n = force_delta_n;
  cfg.force_fp1 = force_fp1;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adflux: HLL-family fluxes with anti-diffusion control on "
               "structured grids"};
  app.set_version_flag("--version", std::string(kBuildId));
  app.require_subcommand(1);

  // ---- run ----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "run a case and emit snapshots/metrics");
  std::string run_config_path, run_case_name = "sod", run_scheme = "hllem_fp";
  std::string run_out = "out", run_format = "csv";
  std::vector<std::string> run_over;
  std::optional<int> run_order;
  std::optional<double> run_cfl, run_tend;
  std::optional<long> run_iters;
  long run_snap_interval = 0;
  unsigned run_seed = 1;
  bool run_floor = false;
  run_cmd->add_option("--config", run_config_path, "run configuration file");
  run_cmd->add_option("--case", run_case_name, "case preset name");
  run_cmd->add_option("--scheme", run_scheme, "flux scheme");
  run_cmd->add_option("--order", run_order, "spatial/temporal order (1 or 2)");
  run_cmd->add_option("--cfl", run_cfl, "CFL number override");
  run_cmd->add_option("--t-end", run_tend, "stop time override");
  run_cmd->add_option("--iters", run_iters, "iteration budget override");
  run_cmd->add_option("--override", run_over, "case key override key=value")
      ->take_all();
  run_cmd->add_option("--out", run_out, "output directory");
  run_cmd->add_option("--format", run_format, "snapshot format: csv|vtk_legacy");
  run_cmd->add_option("--snapshot-interval", run_snap_interval,
                      "steps between snapshots (0: final only)");
  run_cmd->add_option("--seed", run_seed, "seed recorded in output headers");
  run_cmd->add_flag("--floor", run_floor, "clamp unphysical states (robustness)");

  // ---- stability ------------------------------------------------------------
  auto* st_cmd =
      app.add_subcommand("stability", "steady-shock matrix stability sweep");
  std::vector<std::string> st_schemes = {"hlle", "hllem", "hllem_fp", "hllcps",
                                         "hllcps_fp"};
  std::vector<double> st_machs = {2, 3, 5, 7, 10, 15, 20};
  std::string st_out = "out/stability.csv";
  bool st_periodic = false;
  unsigned st_seed = 20260809;
  double st_noise = 0.0;
  st_cmd->add_option("--schemes", st_schemes, "schemes to analyze")->delimiter(',');
  st_cmd->add_option("--mach", st_machs, "upstream Mach numbers")->delimiter(',');
  st_cmd->add_option("--out", st_out, "output CSV");
  st_cmd->add_flag("--periodic", st_periodic, "periodic top/bottom boundaries");
  st_cmd->add_option("--noise", st_noise, "random base-state noise amplitude");
  st_cmd->add_option("--seed", st_seed, "noise seed");

  // ---- riemann1d ------------------------------------------------------------
  auto* r1_cmd = app.add_subcommand(
      "riemann1d", "run a shock tube against the exact solution");
  std::string r1_case = "severe_shock_tube", r1_scheme = "hllem";
  std::string r1_out = "out";
  std::optional<double> r1_force_dn;
  std::optional<int> r1_order;
  std::vector<std::string> r1_over;
  r1_cmd->add_option("--case", r1_case, "sod or severe_shock_tube");
  r1_cmd->add_option("--scheme", r1_scheme, "flux scheme");
  r1_cmd->add_option("--order", r1_order, "spatial order");
  r1_cmd->add_option("--force-delta-n", r1_force_dn,
                     "override the face-normal anti-diffusion coefficient");
  r1_cmd->add_option("--override", r1_over, "case key override")->take_all();
  r1_cmd->add_option("--out", r1_out, "output directory");

  // ---- perturb ----------------------------------------------------------------
  auto* pb_cmd = app.add_subcommand(
      "perturb", "saw-tooth perturbation factors vs closed forms");
  std::vector<std::string> pb_schemes = {"hllcps", "hllcps_fp", "hllem", "hllem_fp"};
  std::vector<double> pb_fp1 = {0.0, 0.5, 1.0};
  std::string pb_out = "out/perturbation.csv";
  pb_cmd->add_option("--schemes", pb_schemes, "schemes")->delimiter(',');
  pb_cmd->add_option("--fp1", pb_fp1, "forced sensor values")->delimiter(',');
  pb_cmd->add_option("--out", pb_out, "output CSV");

  // ---- sweep -------------------------------------------------------------------
  auto* sw_cmd = app.add_subcommand(
      "sweep", "low-Mach cylinder ladder and pressure-fluctuation slope");
  std::vector<std::string> sw_schemes = {"hllem", "hllem_fp", "hllcps", "hllcps_fp"};
  std::vector<double> sw_machs = {0.1, 0.01, 0.001};
  std::string sw_out = "out/pfluc.csv";
  std::optional<long> sw_iters;
  sw_cmd->add_option("--schemes", sw_schemes, "schemes")->delimiter(',');
  sw_cmd->add_option("--mach", sw_machs, "inflow Mach numbers")->delimiter(',');
  sw_cmd->add_option("--iters", sw_iters, "iteration budget override");
  sw_cmd->add_option("--out", sw_out, "output CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      RunConfig rc;
      if (!run_config_path.empty()) rc = load_run_config_file(run_config_path);
      if (run_cmd->count("--case")) rc.case_name = run_case_name;
      if (run_cmd->count("--scheme")) rc.scheme = run_scheme;
      if (run_order) rc.order = run_order;
      if (run_cfl) rc.cfl = run_cfl;
      if (run_tend) rc.t_end = run_tend;
      if (run_iters) rc.max_iters = run_iters;
      if (run_cmd->count("--out")) rc.output_dir = run_out;
      if (run_cmd->count("--format")) rc.snapshot_format = run_format;
      if (run_cmd->count("--snapshot-interval"))
        rc.snapshot_interval = run_snap_interval;
      if (run_cmd->count("--seed")) rc.seed = run_seed;
      rc.floor_enabled = rc.floor_enabled || run_floor;
      for (const auto& kv : parse_overrides(run_over)) rc.case_overrides.push_back(kv);

      const CaseDefinition def = build_case(rc.case_name, rc.case_overrides);
      SchemeConfig scheme = scheme_config_from(rc.scheme, {}, {});
      RunOverrides over;
      over.order = rc.order;
      over.cfl = rc.cfl;
      over.t_end = rc.t_end;
      over.max_iters = rc.max_iters;
      if (!rc.limiter.empty())
        over.limiter = rc.limiter == "none" ? Limiter::none : Limiter::van_leer;
      over.floor_enabled = rc.floor_enabled;

      fs::create_directories(rc.output_dir);
      StepCallback cb;
      StructuredMesh snapshot_mesh;
      std::unique_ptr<MetricsWriter> odd_even_series;
      const bool wants_odd_even =
          std::find(def.diagnostics.begin(), def.diagnostics.end(), "odd_even") !=
          def.diagnostics.end();
      if (rc.snapshot_interval > 0) {
        snapshot_mesh = generate_grid(def);
        if (wants_odd_even)
          odd_even_series = std::make_unique<MetricsWriter>(
              rc.output_dir + "/" + def.name + "_" + rc.scheme + "_odd_even.csv",
              OutputMeta{def.name, rc.scheme, 0, 0.0, rc.seed},
              std::vector<std::string>{"step", "t", "odd_even_asymmetry"});
        cb = [&](const FieldState& f, long step, double t) {
          if (step % rc.snapshot_interval != 0) return;
          OutputMeta meta{def.name, rc.scheme, step, t, rc.seed};
          const std::string p = rc.output_dir + "/" + def.name + "_" + rc.scheme +
                                "_step" + std::to_string(step) +
                                (rc.snapshot_format == "vtk_legacy" ? ".vtk" : ".csv");
          if (rc.snapshot_format == "vtk_legacy")
            write_snapshot_vtk(p, f, snapshot_mesh, gas, meta, case_freestream(def));
          else
            write_snapshot_csv(p, f, snapshot_mesh, gas, meta, case_freestream(def));
          if (odd_even_series) {
            const double ref = def.refs.count("post_shock_rho")
                                   ? def.refs.at("post_shock_rho")
                                   : 1.0;
            odd_even_series->row({static_cast<double>(step), t,
                                  odd_even_asymmetry(f, snapshot_mesh, gas, ref)});
          }
        };
      }
      const CaseRun result = run_case(def, scheme, gas, over, cb);
      write_case_outputs(rc.output_dir, result, rc.scheme, rc.seed,
                         rc.snapshot_format);
    } else if (*st_cmd) {
      fs::create_directories(fs::path(st_out).parent_path().string().empty()
                                 ? "."
                                 : fs::path(st_out).parent_path().string());
      OutputMeta meta{"steady_shock", "", 0, 0.0, st_seed};
      MetricsWriter csv(st_out, meta, {"scheme", "mach", "max_re_lambda"});
      for (const auto& sname : st_schemes)
        for (double m : st_machs) {
          SteadyShockSetup setup = steady_shock_state(m, gas);
          setup.seed = st_seed;
          setup.perturbation = st_noise;
          setup.periodic_topbottom = st_periodic;
          SchemeConfig cfg = scheme_config_from(sname, {}, {});
          const double lam =
              max_real_eigenvalue(build_stability_matrix(setup, cfg, gas));
          csv.row_with_label(sname, {m, lam});
          std::cout << sname << " Ma=" << m << " max Re(lambda) = " << lam << "\n";
        }
    } else if (*r1_cmd) {
      const CaseDefinition def = build_case(r1_case, parse_overrides(r1_over));
      if (def.init_kind != "two_state_x")
        throw ConfigError("riemann1d needs a two-state shock-tube case");
      SchemeConfig scheme = scheme_config_from(r1_scheme, r1_force_dn, {});
      RunOverrides over;
      over.order = r1_order;
      const CaseRun run = run_case(def, scheme, gas, over);

      const RiemannState l{def.init_left.rho, def.init_left.u, def.init_left.p};
      const RiemannState r{def.init_right.rho, def.init_right.u, def.init_right.p};
      const RiemannSolution sol = solve_riemann(l, r, gas);
      std::vector<double> xs(run.mesh.ni());
      for (int i = 0; i < run.mesh.ni(); ++i) xs[i] = run.mesh.cell_cx(i, 0);
      const auto exact = sample_riemann_profile(sol, xs, def.split_x, run.stats.t);

      fs::create_directories(r1_out);
      OutputMeta meta{def.name, r1_scheme, run.stats.steps, run.stats.t, 0};
      const std::string base = r1_out + "/" + def.name + "_" + r1_scheme;
      MetricsWriter prof(base + "_profile.csv", meta,
                         {"x", "rho", "u", "p", "rho_exact", "u_exact", "p_exact"});
      std::vector<double> rho_num(run.mesh.ni()), rho_ex(run.mesh.ni());
      for (int i = 0; i < run.mesh.ni(); ++i) {
        const Primitive w = primitive_from_conserved(run.field.u(i, 0), gas);
        rho_num[i] = w.rho;
        rho_ex[i] = exact[i].rho;
        prof.row({xs[i], w.rho, w.u, w.p, exact[i].rho, exact[i].u, exact[i].p});
      }
      const MonotonicityReport rep = monotonicity_check(rho_num, rho_ex);
      MetricsWriter metrics(base + "_monotonicity.csv", meta, {"name", "value"});
      metrics.row_with_label("overshoot", {rep.overshoot});
      metrics.row_with_label("undershoot", {rep.undershoot});
      metrics.row_with_label("spurious_extrema",
                             {static_cast<double>(rep.spurious_extrema)});
      metrics.row_with_label("star_pressure", {sol.pstar});
      std::cout << "overshoot=" << rep.overshoot << " undershoot=" << rep.undershoot
                << " spurious_extrema=" << rep.spurious_extrema << "\n";
    } else if (*pb_cmd) {
      fs::create_directories(fs::path(pb_out).parent_path().string().empty()
                                 ? "."
                                 : fs::path(pb_out).parent_path().string());
      OutputMeta meta{"sawtooth", "", 0, 0.0, 0};
      MetricsWriter csv(pb_out, meta,
                        {"scheme", "fp1", "nu", "p_factor", "p_predicted",
                         "rho_factor", "rho_predicted", "shear_factor",
                         "shear_predicted", "rho_from_p", "rho_from_p_predicted"});
      for (const auto& sname : pb_schemes) {
        for (double fp1 : pb_fp1) {
          SchemeConfig cfg = scheme_config_from(sname, {}, fp1);
          const PerturbationResult m = perturbation_experiment(cfg, gas);
          const PerturbationPrediction p =
              perturbation_prediction(cfg.scheme, m.nu, fp1, gas);
          csv.row_with_label(sname,
                             {fp1, m.nu, m.p_factor, p.p_factor, m.rho_factor,
                              p.rho_factor, m.shear_factor, p.shear_factor,
                              m.rho_from_p, p.rho_from_p});
        }
      }
      std::cout << "wrote " << pb_out << "\n";
    } else if (*sw_cmd) {
      fs::create_directories(fs::path(sw_out).parent_path().string().empty()
                                 ? "."
                                 : fs::path(sw_out).parent_path().string());
      OutputMeta meta{"low_mach_cylinder", "", 0, 0.0, 0};
      MetricsWriter csv(sw_out, meta, {"scheme", "mach", "p_fluc", "slope"});
      for (const auto& sname : sw_schemes) {
        std::vector<double> ms, pf;
        for (double m : sw_machs) {
          std::vector<std::pair<std::string, std::string>> over = {
              {"init.state", "1.4 " + format_g17(m) + " 0.0 1.0"}};
          const CaseDefinition def = build_case("low_mach_cylinder", over);
          RunOverrides ro;
          ro.max_iters = sw_iters;
          SchemeConfig cfg = scheme_config_from(sname, {}, {});
          try {
            const CaseRun run = run_case(def, cfg, gas, ro);
            const double fluc = pressure_fluctuation(run.field, run.mesh, gas);
            ms.push_back(m);
            pf.push_back(fluc);
            csv.row_with_label(sname, {m, fluc, 0.0});
            std::cout << sname << " M=" << m << " p_fluc=" << fluc << "\n";
          } catch (const UnphysicalState& e) {
            std::cerr << sname << " M=" << m << " diverged: " << e.what()
                      << " (excluded)\n";
          }
        }
        if (ms.size() >= 2) {
          const double slope = log_log_slope(ms, pf);
          csv.row_with_label(sname + "_slope", {0.0, 0.0, slope});
          std::cout << sname << " slope = " << slope << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
