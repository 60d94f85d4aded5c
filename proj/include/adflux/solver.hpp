#ifndef ADFLUX_SOLVER_HPP
#define ADFLUX_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "adflux/boundary.hpp"
#include "adflux/field.hpp"
#include "adflux/fluxes.hpp"
#include "adflux/reconstruction.hpp"
#include "adflux/sensors.hpp"

namespace adflux {

struct SolverOptions {
  SchemeConfig scheme{};
  ReconstructionConfig recon{};
  double cfl = 0.8;
  int time_order = 1;  // 1 = forward Euler, 2 = two-stage Runge-Kutta
  // Robustness-study mode: clamp rho and p at the floor instead of aborting.
  bool floor_enabled = false;
  double floor_value = 1e-10;
};

struct ResidualStats {
  long recon_fallbacks = 0;  // faces dropped to first order
  long floor_hits = 0;
};

/// Scratch buffers reused across residual evaluations.
struct ResidualWorkspace {
  Array2D<Primitive> w;  // primitives incl. ghosts
  FaceSensorField fp, fp1, fp1dn;
  Array2D<Flux4> fx, fy;  // global-frame face fluxes
  Array2D<Conserved> rhs;
  FieldState stage;
  std::vector<Primitive> line;
  std::vector<Primitive> line_l, line_r;
  void resize(int ni, int nj);
};

/// Semi-discrete right-hand side dU/dt on the fluid cells. Ghosts are filled
/// from the boundary spec at time t; interior faces are evaluated once and
/// applied with opposite signs to both neighbours. Faces adjacent to solid
/// cells see a mirrored wall state; faces between two solid cells carry no
/// flux. Reconstructed face states that turn out unphysical fall back to the
/// cell values at that face (counted in stats).
void residual(FieldState& field, const StructuredMesh& mesh, const SolverOptions& opt,
              const BoundarySpec& bc, const GasModel& gas, double t,
              Array2D<Conserved>& dudt, ResidualWorkspace& ws,
              ResidualStats* stats = nullptr);

/// cfl * min over fluid cells of area / sum_faces (|un| + a) ds.
double compute_time_step(const FieldState& field, const StructuredMesh& mesh,
                         double cfl, const GasModel& gas);

/// One explicit step (forward Euler or the two-stage Runge-Kutta of the
/// configured time order). Throws UnphysicalState if a stage produces an
/// invalid interior cell and the floor is disabled. When requested, the L2
/// norm of the density residual at the step's first evaluation is reported.
void advance_step(FieldState& field, const StructuredMesh& mesh,
                  const SolverOptions& opt, const BoundarySpec& bc,
                  const GasModel& gas, double t, double dt, ResidualWorkspace& ws,
                  ResidualStats* stats = nullptr,
                  double* density_residual_out = nullptr);

/// Generic two-stage Runge-Kutta update u1 = u + dt L(u);
/// u^{n+1} = (u + u1 + dt L(u1)) / 2, for scalar ODE tests.
double rk2_scalar_step(double u, double dt,
                       const std::function<double(double)>& rhs);

struct StopRule {
  std::optional<double> t_end;
  std::optional<long> max_iters;
};

struct RunStats {
  long steps = 0;
  double t = 0.0;
  ResidualStats residual_stats;
  std::vector<double> density_residual_l2;  // one entry per step
};

using StepCallback = std::function<void(const FieldState&, long step, double t)>;

/// Time-march until the stop rule is met. Transient rules clip the last step
/// to land exactly on t_end; iteration budgets run a fixed count.
RunStats run_simulation(FieldState& field, const StructuredMesh& mesh,
                        const SolverOptions& opt, const BoundarySpec& bc,
                        const GasModel& gas, const StopRule& stop,
                        const StepCallback& on_step = {});

/// L2 norm over fluid cells of the density component of dudt.
double density_residual_l2(const Array2D<Conserved>& dudt,
                           const StructuredMesh& mesh);

}  // namespace adflux

#endif
