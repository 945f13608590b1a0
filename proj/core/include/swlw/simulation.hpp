#pragma once

#include <functional>
#include <vector>

#include "swlw/galerkin.hpp"
#include "swlw/invariants.hpp"

namespace swlw {

struct RunCallbacks {
  std::function<void(const MonitorRecord&)> on_monitor;
  std::function<void(const GalerkinSolver&, const GalerkinState&)> on_snapshot;
  // Called after every step; lets callers sample the trajectory at their own cadence.
  std::function<void(const GalerkinSolver&, const GalerkinState&)> on_step;
};

struct RunResult {
  GalerkinState final_state;
  std::vector<MonitorRecord> monitors;
  double min_entropy_rate = 0.0;  // over every step start and the final state
  double energy_scale = 0.0;      // initial total energy
  long steps = 0;
};

long step_count(const SolverConfig& cfg);

// Integrates to t_end. Callbacks fire as data is produced, so a thrown
// PositivityError/DivergenceError leaves everything up to the failure delivered.
RunResult run(const SolverConfig& cfg, const RunCallbacks& cb = {});
RunResult run(const GalerkinSolver& solver, GalerkinState state, const RunCallbacks& cb = {});

}  // namespace swlw
