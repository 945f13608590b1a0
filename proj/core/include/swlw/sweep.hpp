#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swlw/euler_limit.hpp"
#include "swlw/galerkin.hpp"
#include "swlw/invariants.hpp"

namespace swlw {

// Inputs of a vanishing-viscosity sweep.
struct SweepSettings {
  SolverConfig base;  // ε, α, β, δ are overwritten per rung
  std::vector<double> eps_ladder = {0.1, 0.05, 0.025, 0.0125};
  double alpha_exp = 0.75;
  double beta_exp = 1.5;
  double delta_exp = 1.5;
  double comparison_time = 0.2;
  int comparison_samples = 40;
  int comparison_points = 512;  // intervals of the Eulerian comparison grid
  int reference_cells = 2048;
  int reference_nls_points = 1024;
  double reference_nls_dt = 1e-4;
  EulerFlux reference_flux = EulerFlux::LLF;
  double thermal_test_amplitude = 0.5;
  int workers = 4;

  std::vector<std::string> violations() const;
  void validate() const;
};

struct SweepJob {
  double eps = 0, alpha = 0, beta = 0, delta = 0;
  SolverConfig config;
};

struct SweepPlan {
  SweepSettings settings;
  std::vector<SweepJob> jobs;  // in ladder order
};

// Validates the scalings and builds one solver configuration per rung.
SweepPlan make_plan(const SweepSettings& s);

struct SweepRow {
  double eps = 0, alpha = 0, beta = 0, delta = 0;
  std::string status = "ok";
  double l1_rho = 0, l1_m = 0;       // at the comparison time
  double w_dist = 0;                 // L²(0,T; L²) of the antiderivative of w^ε − w
  double psi_dist = 0;               // max over samples of ‖ψ^ε − ψ‖_{L⁴}
  double beta_h_sup = 0;             // max of β|h^ε|
  double beta_half_h_l2 = 0;         // max over samples of β^{1/2}‖h^ε‖_{L²}
  double unif1 = 0, unif2 = 0, unif2_time = 0, unif3 = 0, unif4 = 0, unif5 = 0, dissipation = 0;
  double balance_eps = 0, balance_delta = 0, balance_beta = 0, balance_alpha = 0;
  double thermal_residual = 0;       // divided by the initial total energy
  double vacuum_measure = 0;
  double energy_ratio = 0;           // max_t E_lim(t) / E_lim(0)
  double wall_seconds = 0;           // reported in the manifest, not the table

  static const std::vector<std::string>& columns();
  std::vector<double> values() const;  // numeric columns after eps..delta, status excluded
  double column(const std::string& name) const;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::vector<MonitorRecord>> monitors;  // per rung
  double reference_seconds = 0;
};

SweepResult run_sweep(const SweepPlan& plan);

struct RateFit {
  double slope = 0, intercept = 0, residual = 0;  // residual is the RMS misfit in log space
};

// Least-squares slope of log(column) against log(eps). Needs ≥ 3 rows and positive values.
RateFit fit_rate(const std::vector<SweepRow>& rows, const std::string& column);

}  // namespace swlw
