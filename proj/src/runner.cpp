#include "adflux/runner.hpp"

namespace adflux {

SolverOptions solver_options_for(const CaseDefinition& def,
                                 const SchemeConfig& scheme,
                                 const RunOverrides& over) {
  SolverOptions opt;
  opt.scheme = scheme;
  opt.cfl = over.cfl.value_or(def.cfl);
  const int order = over.order.value_or(def.order);
  opt.recon.order = order;
  opt.time_order = order;
  if (over.limiter)
    opt.recon.limiter = *over.limiter;
  else
    opt.recon.limiter = def.limiter == "none" ? Limiter::none : Limiter::van_leer;
  opt.floor_enabled = over.floor_enabled;
  return opt;
}

CaseRun run_case(const CaseDefinition& def, const SchemeConfig& scheme,
                 const GasModel& gas, const RunOverrides& over,
                 const StepCallback& on_step) {
  CaseRun run{def, generate_grid(def), {}, {}};
  run.field = initial_field(def, run.mesh, gas);
  const BoundarySpec bc = boundary_spec(def, run.mesh, gas);
  const SolverOptions opt = solver_options_for(def, scheme, over);

  StopRule stop;
  stop.t_end = over.t_end ? over.t_end : def.t_end;
  stop.max_iters = over.max_iters ? over.max_iters : def.max_iters;
  if (over.t_end || over.max_iters) {
    // explicit override replaces the preset rule entirely
    stop.t_end = over.t_end;
    stop.max_iters = over.max_iters;
    if (!stop.t_end && !stop.max_iters)
      throw std::invalid_argument("run_case: empty stop rule override");
  }

  run.stats = run_simulation(run.field, run.mesh, opt, bc, gas, stop, on_step);
  return run;
}

}  // namespace adflux
