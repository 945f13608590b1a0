#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "swlw/constitutive.hpp"
#include "swlw/fields.hpp"
#include "swlw/initial_data.hpp"
#include "swlw/spectral.hpp"

namespace swlw {

inline constexpr double kVFloor = 1e-8;
inline constexpr double kThetaFloor = 1e-8;

enum class Integrator { LawsonRK4, RK4 };
enum class HForm { Paper, Conservative };

const char* integrator_name(Integrator i);
const char* h_form_name(HForm h);

struct SolverConfig {
  GasParams params;
  std::optional<ThermalLaw> law;  // standard law when empty
  CouplingFns coupling = CouplingFns::standard();
  int n = 64;
  double dt = 1e-4;
  double t_end = 1.0;
  int collocation_points = 0;  // 0 selects 3n
  bool dealias = true;
  int monitor_every = 100;
  int snapshot_every = 0;  // 0 disables intermediate snapshots
  Integrator integrator = Integrator::LawsonRK4;
  HForm h_form = HForm::Paper;
  InitialData initial;

  int M() const { return collocation_points > 0 ? collocation_points : 3 * n; }
  std::vector<std::string> violations() const;
  void validate() const;
};

// Modal coefficients (sine for u, w, h, ψ; cosine for θ) and nodal specific volume.
struct GalerkinState {
  int n = 0;
  double t = 0.0;
  std::vector<double> u;
  std::array<std::vector<double>, 2> w, h;
  std::vector<double> theta;  // k = 0..n
  cvec psi;
  std::vector<double> v;      // M+1 nodes

  static GalerkinState zeros(int n, int M);
};

// Pointwise values at the collocation nodes.
struct NodalFields {
  std::vector<double> u, u_y, theta, theta_y, v, v_y, rho;
  std::array<std::vector<double>, 2> w, w_y, h, h_y;
  cvec psi, psi_y;
};

struct StepInfo {
  double entropy_rate = 0.0;  // d/dt ∫ s dy at the start of the step
};

class GalerkinSolver {
public:
  explicit GalerkinSolver(SolverConfig cfg);

  const SolverConfig& config() const { return cfg_; }
  const SpectralGrid& grid() const { return grid_; }
  const Gas& gas() const { return gas_; }
  double length() const { return grid_.length(); }

  GalerkinState initial_state() const;
  GalerkinState project(const std::vector<double>& u, const std::array<std::vector<double>, 2>& w,
                        const std::array<std::vector<double>, 2>& h,
                        const std::vector<double>& theta, const cvec& psi,
                        const std::vector<double>& v, double t = 0.0) const;

  NodalFields nodal(const GalerkinState& s) const;
  FieldSnapshot reconstruct(const GalerkinState& s) const;
  FieldSnapshot reconstruct(const GalerkinState& s, const std::vector<double>& y) const;
  EulerianFields to_eulerian(const GalerkinState& s, const std::vector<double>& x) const;

  // Time derivatives of every coefficient vector and of v. Throws PositivityError.
  GalerkinState assemble_rhs(const GalerkinState& s) const;
  GalerkinState step(const GalerkinState& s, StepInfo* info = nullptr) const;

  // Positivity and finiteness of a state; throws on failure.
  void check_state(const GalerkinState& s) const;

  // d/dt ∫ s dy for a state and its time derivative.
  double entropy_rate(const GalerkinState& s, const GalerkinState& rhs) const;

  // ε n² π² dt / L²; explicit RK4 is stable for values up to about 2.8.
  double stability_number() const;

private:
  SolverConfig cfg_;
  Gas gas_;
  SpectralGrid grid_;
};

SpectralGrid make_grid(const SolverConfig& cfg);

}  // namespace swlw
