#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "swlw/constitutive.hpp"
#include "swlw/entropy_pairs.hpp"
#include "swlw/fields.hpp"
#include "swlw/test_functions.hpp"

namespace swlw {

enum class EulerFlux { LLF, HLL };

const char* euler_flux_name(EulerFlux f);
EulerFlux parse_euler_flux(const std::string& s);

struct EulerParams {
  double a = 1.0;
  double gamma = 2.0;
  EulerFlux flux = EulerFlux::LLF;
  double cfl = 0.45;

  static EulerParams from(const GasParams& p);
  std::vector<std::string> violations() const;
  void validate() const;
};

// Cell averages of (ρ, m = ρu) on a uniform grid over [0, length].
struct EulerState {
  double t = 0.0;
  double length = 1.0;
  std::vector<double> rho, m;

  int cells() const { return static_cast<int>(rho.size()); }
  double dx() const { return length / cells(); }
  std::vector<double> centers() const;

  // Cell averages of ρ(x) and ρ(x)u(x) by 3-point Gauss quadrature.
  template <class R, class U>
  static EulerState from_profile(int cells, R&& rho, U&& u, double length = 1.0);
};

// Fluxes through each face integrated over the step, so that
// Σρ dx changes by exactly −(mass_flux[N] − mass_flux[0]).
struct EulerStepInfo {
  std::vector<double> mass_flux, momentum_flux;  // size cells + 1
};

double sound_speed(double rho, const EulerParams& p);
double max_signal_speed(const EulerState& s, const EulerParams& p);
double stable_dt(const EulerState& s, const EulerParams& p);

// MUSCL-minmod reconstruction, LLF or HLL flux, SSPRK2, reflective walls.
// Throws StepSizeError on a CFL violation and PositivityError on negative density.
EulerState euler_step(const EulerState& s, double dt, const EulerParams& p,
                      EulerStepInfo* info = nullptr);

// Every step of a run, so that discrete entropy fluxes can be recomputed.
struct EulerTrajectory {
  EulerParams params;
  std::vector<EulerState> states;  // states[0] is the initial state
  std::vector<EulerStepInfo> steps;

  double dt(std::size_t n) const { return states[n + 1].t - states[n].t; }
};

EulerTrajectory euler_run(EulerState s0, double t_end, const EulerParams& p);

double mechanical_energy(const EulerState& s, const EulerParams& p);

// Smoothed dam-break: ρ from rho_left to rho_right across x = 0.5 over `width`, u = 0.
EulerState dam_break(int cells, double rho_left, double rho_right, double width);

// ∬[η φ_t + q φ_x] + ∫η(0)φ(0), summed by parts from the discrete entropy balance
// of the scheme. Nonnegative for an entropy solution. Builtin ζ ids only.
double entropy_inequality_residual(const EulerTrajectory& traj, const std::string& zeta_id,
                                   const TestFunction& phi);
double entropy_inequality_residual(const EulerTrajectory& traj, const EntropyPairSpec& spec,
                                   const TestFunction& phi);

// Cubic NLS iψ_t + ψ_yy = |ψ|²ψ on [0, length] with Dirichlet ends.
struct NlsState {
  double t = 0.0;
  double length = 1.0;
  std::vector<std::complex<double>> psi;  // nodes 0..N, ends zero

  int intervals() const { return static_cast<int>(psi.size()) - 1; }
  double dy() const { return length / intervals(); }
};

struct NlsParams {
  bool cubic = true;
};

// Strang splitting: half exact phase rotation, Crank–Nicolson for ψ_yy, half rotation.
NlsState nls_step(const NlsState& s, double dt, const NlsParams& p = {});
double nls_mass(const NlsState& s);    // ∫|ψ|² dy
double nls_energy(const NlsState& s);  // ∫ ½|ψ_y|² + ¼|ψ|⁴ dy

// Transverse velocity w on the Euler cells.
// Upwind transport of ρw by the given face mass fluxes followed by implicit μw_xx with w = 0 at the walls.
// rho_new must equal rho_old minus the flux divergence.
std::vector<double> transverse_step(const std::vector<double>& w, const std::vector<double>& rho_old,
                                    const std::vector<double>& rho_new,
                                    const std::vector<double>& face_mass_flux, double dx, double dt,
                                    double mu);
// Same, with face fluxes dt·½(m_i + m_{i+1}) taken from a frozen Euler state.
std::vector<double> transverse_step(const std::vector<double>& w, const std::vector<double>& rho,
                                    const std::vector<double>& m, double dx, double dt, double mu);

struct ThermalResidual {
  double value = 0.0;           // must be ≤ tol for a variational solution
  double vacuum_measure = 0.0;  // time-averaged measure of {ρ < 1e-10}
};

// ∬[ρQφ_t + ρuQφ_x + 𝒦φ_xx] + ∬μ|w_x|²φ + ∫ρ₀Q(θ₀)φ(0), trapezoid in x and t.
ThermalResidual thermal_inequality_residual(const std::vector<EulerianFields>& traj,
                                            const TestFunction& phi, const Gas& gas);

// Coupled limit run: Euler + transverse w + independent NLS, sampled at fixed times.
struct LimitSample {
  double t = 0.0;
  std::vector<double> rho, m;
  std::array<std::vector<double>, 2> w;
  std::vector<std::complex<double>> psi;
};

struct LimitConfig {
  EulerParams euler;
  double mu = 1.0;
  int cells = 400;
  int nls_intervals = 256;
  double nls_dt = 1e-4;
  double nls_length = 1.0;
  double t_end = 0.2;
  int samples = 40;  // intervals; samples + 1 times including 0
};

struct LimitResult {
  std::vector<double> x;  // cell centers
  std::vector<double> y;  // NLS nodes
  std::vector<LimitSample> samples;
};

LimitResult limit_run(const LimitConfig& cfg, const EulerState& euler0,
                      const std::array<std::vector<double>, 2>& w0, const NlsState& nls0);

template <class R, class U>
EulerState EulerState::from_profile(int cells, R&& rho, U&& u, double length) {
  static constexpr double g[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static constexpr double gw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  EulerState s;
  s.length = length;
  s.rho.assign(cells, 0.0);
  s.m.assign(cells, 0.0);
  const double dx = length / cells;
  for (int i = 0; i < cells; ++i) {
    for (int k = 0; k < 3; ++k) {
      const double x = (i + 0.5 + 0.5 * g[k]) * dx;
      const double r = rho(x);
      s.rho[i] += gw[k] * r;
      s.m[i] += gw[k] * r * u(x);
    }
  }
  return s;
}

}  // namespace swlw
