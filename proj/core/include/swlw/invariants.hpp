#pragma once

#include <array>
#include <string>
#include <vector>

#include "swlw/galerkin.hpp"

namespace swlw {

// One row of the monitor stream. Running integrals start at 0 at t = 0.
struct MonitorRecord {
  double t = 0;
  double mass = 0;                  // ∫ v dy
  double total_energy = 0;          // fluid + ψ + coupling energy
  double fluid_energy = 0;          // ∫ [e + ½u² + ½|w|² + ½βv|h|²] dy
  double psi_energy = 0;            // ∫ [½|ψ_y|² + ¼|ψ|⁴] dy
  double coupling_energy = 0;       // ∫ α g(v) h(|ψ|²) dy
  double entropy_integral = 0;      // ∫ s dy
  double entropy_production_rate = 0;
  double psi_l2 = 0;                // ∫ |ψ|² dy
  double min_v = 0, max_v = 0, min_theta = 0, max_theta = 0;
  double unif1 = 0;
  double unif2 = 0;
  double unif2_time = 0;
  double unif3 = 0;
  double unif4 = 0;
  double unif5 = 0;
  double dissipation = 0;
  int no_thermal_pressure = 0;

  static const std::vector<std::string>& columns();
  std::vector<double> values() const;
};

// Instantaneous integrands of the running space–time quantities.
struct MonitorRates {
  double unif2_time = 0, unif3 = 0, unif4 = 0, unif5 = 0, dissipation = 0;
};

struct Measurement {
  MonitorRecord record;  // running columns left at zero
  MonitorRates rates;
};

Measurement measure(const GalerkinSolver& solver, const GalerkinState& s);

// Trapezoid-in-time accumulation of the running columns.
class MonitorAccumulator {
public:
  MonitorRecord push(const Measurement& m);
  bool empty() const { return !started_; }

private:
  bool started_ = false;
  double t_prev_ = 0;
  MonitorRates prev_{};
  MonitorRates sum_{};
};

// |E(t₂) − E(t₁)| / scale.
double check_energy_identity(const MonitorRecord& a, const MonitorRecord& b, double scale);

// Relative change of the total energy over a record stream.
double energy_drift(const std::vector<MonitorRecord>& stream);
double mass_drift(const std::vector<MonitorRecord>& stream);

}  // namespace swlw
