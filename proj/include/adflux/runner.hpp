#ifndef ADFLUX_RUNNER_HPP
#define ADFLUX_RUNNER_HPP

#include "adflux/cases.hpp"
#include "adflux/solver.hpp"

namespace adflux {

/// Knobs the CLI may lay over a case preset.
struct RunOverrides {
  std::optional<int> order;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<long> max_iters;
  std::optional<Limiter> limiter;
  bool floor_enabled = false;
};

struct CaseRun {
  CaseDefinition def;
  StructuredMesh mesh;
  FieldState field;
  RunStats stats;
};

/// Build the grid and initial field for a case, march it to the case's stop
/// rule and return the final state.
CaseRun run_case(const CaseDefinition& def, const SchemeConfig& scheme,
                 const GasModel& gas, const RunOverrides& over = {},
                 const StepCallback& on_step = {});

SolverOptions solver_options_for(const CaseDefinition& def,
                                 const SchemeConfig& scheme,
                                 const RunOverrides& over);

}  // namespace adflux

#endif
