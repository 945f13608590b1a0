#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "swlw/invariants.hpp"
#include "swlw/simulation.hpp"

using namespace swlw;

namespace {

constexpr double kPi = std::numbers::pi;

SolverConfig flat_config() {
  SolverConfig c;
  c.n = 8;
  c.initial.profile = "constant";
  c.initial.rho_mean = 1.0;
  c.params.alpha = 0.0;
  c.params.beta = 0.0;
  return c;
}

GalerkinState with(const GalerkinSolver& s, double u_amp, double v_value) {
  const std::size_t m = s.grid().M() + 1;
  std::vector<double> u(m), th(m, 1.0), v(m, v_value);
  for (std::size_t j = 0; j < m; ++j) u[j] = u_amp * std::sin(kPi * s.grid().nodes()[j]);
  const std::array<std::vector<double>, 2> z{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
  return s.project(u, z, z, th, cvec(m), v);
}

}  // namespace

TEST(Invariants, EquilibriumHasNoEntropyProduction) {
  const GalerkinSolver solver(flat_config());
  const Measurement m = measure(solver, solver.initial_state());
  EXPECT_NEAR(m.record.entropy_production_rate, 0.0, 1e-14);
  EXPECT_NEAR(m.rates.dissipation, 0.0, 1e-14);
  EXPECT_NEAR(m.record.mass, 1.0, 1e-14);
}

TEST(Invariants, ViscousDissipationOfSineVelocity) {
  const SolverConfig cfg = flat_config();
  const GalerkinSolver solver(cfg);
  const Measurement m = measure(solver, with(solver, 1.0, 1.0));
  // ∫ ε (π cos πy)² dy = επ²/2.
  EXPECT_NEAR(m.rates.dissipation, cfg.params.epsilon * kPi * kPi / 2, 1e-12);
  EXPECT_NEAR(m.record.fluid_energy - measure(solver, with(solver, 0.0, 1.0)).record.fluid_energy,
              0.25, 1e-13);
}

TEST(Invariants, MassOfConstantVolume) {
  const GalerkinSolver solver(flat_config());
  EXPECT_NEAR(measure(solver, with(solver, 0.0, 2.0)).record.mass, 2.0, 1e-14);
}

TEST(Invariants, CouplingOffSplitsEnergy) {
  SolverConfig cfg = flat_config();
  cfg.initial.profile = "smooth-periodic";
  cfg.params.beta = 1.0;
  const GalerkinSolver solver(cfg);
  const MonitorRecord r = measure(solver, solver.initial_state()).record;
  EXPECT_EQ(r.coupling_energy, 0.0);
  EXPECT_NEAR(r.total_energy, r.fluid_energy + r.psi_energy, 1e-14);
  EXPECT_GT(r.psi_energy, 0.0);
}

TEST(Invariants, RunningIntegralsNondecreasing) {
  SolverConfig cfg = flat_config();
  cfg.initial.profile = "smooth-periodic";
  cfg.params.alpha = 1.0;
  cfg.params.beta = 1.0;
  cfg.t_end = 0.02;
  cfg.monitor_every = 10;
  const RunResult r = run(cfg);
  ASSERT_GE(r.monitors.size(), 3u);
  EXPECT_EQ(r.monitors.front().dissipation, 0.0);
  for (std::size_t i = 1; i < r.monitors.size(); ++i) {
    const auto& a = r.monitors[i - 1];
    const auto& b = r.monitors[i];
    EXPECT_GT(b.t, a.t);
    EXPECT_GE(b.unif2_time, a.unif2_time);
    EXPECT_GE(b.unif3, a.unif3);
    EXPECT_GE(b.unif4, a.unif4);
    EXPECT_GE(b.unif5, a.unif5);
    EXPECT_GE(b.dissipation, a.dissipation);
    EXPECT_GE(b.entropy_integral, a.entropy_integral - 1e-12);
  }
  EXPECT_LE(mass_drift(r.monitors), 1e-12);
  EXPECT_LE(energy_drift(r.monitors), 1e-8);
  EXPECT_GE(r.min_entropy_rate, 0.0);
}

TEST(Invariants, MonitorColumnsMatchValues) {
  MonitorRecord r;
  EXPECT_EQ(MonitorRecord::columns().size(), r.values().size());
  EXPECT_EQ(MonitorRecord::columns().front(), "t");
}
