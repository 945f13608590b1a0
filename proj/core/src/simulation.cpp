#include "swlw/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace swlw {

long step_count(const SolverConfig& cfg) { return std::lround(cfg.t_end / cfg.dt); }

RunResult run(const SolverConfig& cfg, const RunCallbacks& cb) {
  const GalerkinSolver solver(cfg);
  return run(solver, solver.initial_state(), cb);
}

RunResult run(const GalerkinSolver& solver, GalerkinState state, const RunCallbacks& cb) {
  const SolverConfig& cfg = solver.config();
  const long nsteps = step_count(cfg);
  RunResult res;
  MonitorAccumulator acc;
  auto monitor = [&](const GalerkinState& s) {
    const Measurement m = measure(solver, s);
    const MonitorRecord r = acc.push(m);
    res.monitors.push_back(r);
    if (cb.on_monitor) cb.on_monitor(r);
  };
  monitor(state);
  res.energy_scale = res.monitors.front().total_energy;
  res.min_entropy_rate = res.monitors.front().entropy_production_rate;
  if (cb.on_snapshot) cb.on_snapshot(solver, state);
  for (long i = 1; i <= nsteps; ++i) {
    StepInfo info;
    state = solver.step(state, &info);
    state.t = i * cfg.dt;
    res.min_entropy_rate = std::min(res.min_entropy_rate, info.entropy_rate);
    res.steps = i;
    if (cb.on_step) cb.on_step(solver, state);
    if (i % cfg.monitor_every == 0 || i == nsteps) {
      monitor(state);
      res.min_entropy_rate = std::min(res.min_entropy_rate, res.monitors.back().entropy_production_rate);
    }
    if (cb.on_snapshot && ((cfg.snapshot_every > 0 && i % cfg.snapshot_every == 0) || i == nsteps))
      cb.on_snapshot(solver, state);
  }
  res.final_state = std::move(state);
  return res;
}

}  // namespace swlw
