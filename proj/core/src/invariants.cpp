#include "swlw/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "swlw/errors.hpp"

namespace swlw {

const std::vector<std::string>& MonitorRecord::columns() {
  static const std::vector<std::string> cols = {
      "t",          "mass",        "total_energy", "fluid_energy",
      "psi_energy", "coupling_energy", "entropy_integral", "entropy_production_rate",
      "psi_l2",     "min_v",       "max_v",        "min_theta",
      "max_theta",  "unif1",       "unif2",        "unif2_time",
      "unif3",      "unif4",       "unif5",        "dissipation",
      "no_thermal_pressure"};
  return cols;
}

std::vector<double> MonitorRecord::values() const {
  return {t,      mass,       total_energy, fluid_energy, psi_energy, coupling_energy,
          entropy_integral, entropy_production_rate, psi_l2, min_v, max_v, min_theta,
          max_theta, unif1, unif2, unif2_time, unif3, unif4, unif5, dissipation,
          static_cast<double>(no_thermal_pressure)};
}

Measurement measure(const GalerkinSolver& solver, const GalerkinState& s) {
  const GalerkinState rhs = solver.assemble_rhs(s);  // also checks positivity
  const NodalFields f = solver.nodal(s);
  const Gas& gas = solver.gas();
  const GasParams& P = gas.params();
  const CouplingFns& cp = solver.config().coupling;
  const auto& w = solver.grid().weights();
  const double theta_exp = P.vartheta();

  Measurement m;
  MonitorRecord& r = m.record;
  MonitorRates& q = m.rates;
  r.t = s.t;
  r.min_v = r.min_theta = INFINITY;
  r.max_v = r.max_theta = -INFINITY;
  double fluid = 0, psi_e = 0, coup = 0, ent = 0, l2 = 0, u2 = 0;
  for (std::size_t j = 0; j < f.v.size(); ++j) {
    const double v = f.v[j], rho = 1.0 / v, th = f.theta[j];
    const double hsq = f.h[0][j] * f.h[0][j] + f.h[1][j] * f.h[1][j];
    const double wsq = f.w[0][j] * f.w[0][j] + f.w[1][j] * f.w[1][j];
    const double wy2 = f.w_y[0][j] * f.w_y[0][j] + f.w_y[1][j] * f.w_y[1][j];
    const double hy2 = f.h_y[0][j] * f.h_y[0][j] + f.h_y[1][j] * f.h_y[1][j];
    const double z = std::norm(f.psi[j]);
    const double e = gas.elastic_potential(rho) + gas.Q(th);
    fluid += w[j] * (e + 0.5 * f.u[j] * f.u[j] + 0.5 * wsq + 0.5 * P.beta * v * hsq);
    psi_e += w[j] * (0.5 * std::norm(f.psi_y[j]) + 0.25 * z * z);
    coup += w[j] * P.alpha * cp.g(v) * cp.h(z);
    ent += w[j] * gas.entropy(rho, th);
    l2 += w[j] * z;
    u2 += w[j] * (P.epsilon * P.epsilon * f.v_y[j] * f.v_y[j] / (v * v) +
                  P.epsilon * P.beta * P.beta * hsq * v * v);
    r.mass += w[j] * v;
    r.min_v = std::min(r.min_v, v);
    r.max_v = std::max(r.max_v, v);
    r.min_theta = std::min(r.min_theta, th);
    r.max_theta = std::max(r.max_theta, th);

    q.unif2_time += w[j] * (P.epsilon * f.v_y[j] * f.v_y[j] * std::pow(v, -2.0 - P.gamma) +
                            P.epsilon * P.beta * hy2);
    q.unif3 += w[j] * (std::pow(rho, P.gamma) + P.delta * th * gas.p_theta(rho) + P.beta * hsq);
    q.unif4 += w[j] * (std::pow(std::abs(f.u[j]), 3.0) + std::pow(rho, P.gamma + theta_exp - 1.0));
    const double g = 0.5 * P.q * std::pow(th, 0.5 * P.q - 1.0) * f.theta_y[j];
    q.unif5 += w[j] * (std::pow(th, P.q + 1.0) * v + g * g / v);
    q.dissipation += w[j] *
                     (gas.heat_conductivity(th) * f.theta_y[j] * f.theta_y[j] / (th * th) +
                      P.epsilon * f.u_y[j] * f.u_y[j] + P.mu * wy2 + P.nu * hy2) /
                     v;
  }
  r.fluid_energy = fluid;
  r.psi_energy = psi_e;
  r.coupling_energy = coup;
  r.total_energy = fluid + psi_e + coup;
  r.entropy_integral = ent;
  r.entropy_production_rate = solver.entropy_rate(s, rhs);
  r.psi_l2 = l2;
  r.unif1 = r.total_energy;
  r.unif2 = u2;
  r.no_thermal_pressure = (P.delta == 0.0 || P.p0 == 0.0) ? 1 : 0;
  for (double x : r.values())
    if (!std::isfinite(x)) throw DivergenceError("monitor", s.t);
  return m;
}

MonitorRecord MonitorAccumulator::push(const Measurement& m) {
  if (started_) {
    const double dt = m.record.t - t_prev_;
    sum_.unif2_time += 0.5 * dt * (prev_.unif2_time + m.rates.unif2_time);
    sum_.unif3 += 0.5 * dt * (prev_.unif3 + m.rates.unif3);
    sum_.unif4 += 0.5 * dt * (prev_.unif4 + m.rates.unif4);
    sum_.unif5 += 0.5 * dt * (prev_.unif5 + m.rates.unif5);
    sum_.dissipation += 0.5 * dt * (prev_.dissipation + m.rates.dissipation);
  }
  started_ = true;
  t_prev_ = m.record.t;
  prev_ = m.rates;
  MonitorRecord r = m.record;
  r.unif2_time = sum_.unif2_time;
  r.unif3 = sum_.unif3;
  r.unif4 = sum_.unif4;
  r.unif5 = sum_.unif5;
  r.dissipation = sum_.dissipation;
  return r;
}

double check_energy_identity(const MonitorRecord& a, const MonitorRecord& b, double scale) {
  return std::abs(b.total_energy - a.total_energy) / scale;
}

double energy_drift(const std::vector<MonitorRecord>& stream) {
  if (stream.size() < 2) return 0.0;
  const double e0 = stream.front().total_energy;
  double worst = 0.0;
  for (const auto& r : stream) worst = std::max(worst, std::abs(r.total_energy - e0));
  return worst / std::abs(e0);
}

double mass_drift(const std::vector<MonitorRecord>& stream) {
  if (stream.size() < 2) return 0.0;
  const double m0 = stream.front().mass;
  double worst = 0.0;
  for (const auto& r : stream) worst = std::max(worst, std::abs(r.mass - m0));
  return worst / std::abs(m0);
}

}  // namespace swlw
