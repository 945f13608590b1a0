#pragma once

#include <functional>
#include <string>
#include <vector>

namespace swlw {

struct GasParams {
  double a = 1.0;
  double gamma = 2.0;
  double delta = 1.0;
  double epsilon = 0.1;
  double mu = 1.0;
  double nu = 1.0;
  double beta = 1.0;
  double alpha = 1.0;
  double r = 1.0;
  double q = 4.0;
  double e1 = 1.0;
  double e2 = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;
  double p0 = 1.0;
  double Gamma = 1.0;
  bool allow_gamma_above_3 = false;

  double vartheta() const { return 0.5 * (gamma - 1.0); }
  double Lambda() const { return (3.0 - gamma) / (2.0 * (gamma - 1.0)); }

  // Empty when valid. `viscous` adds the strict positivity of the dissipative constants.
  std::vector<std::string> violations(bool viscous = true) const;
  void validate(bool viscous = true) const;
};

// Temperature and density laws. Every member is replaceable.
struct ThermalLaw {
  std::function<double(double)> p_theta;        // thermal pressure factor p_θ(ρ)
  std::function<double(double)> c_theta;        // specific heat C_ϑ(θ)
  std::function<double(double)> Q;              // ∫₀^θ C_ϑ
  std::function<double(double)> s_theta;        // ∫₁^θ C_ϑ(z)/z dz
  std::function<double(double)> s_rho;          // ∫₁^ρ p_θ(z)/z² dz
  std::function<double(double)> kappa;          // κ(θ)
  std::function<double(double)> kappa_primitive;  // 𝒦(θ) = ∫₀^θ κ

  static ThermalLaw standard(const GasParams& p);
};

class Gas {
public:
  explicit Gas(GasParams p);
  Gas(GasParams p, ThermalLaw law);

  const GasParams& params() const { return p_; }
  const ThermalLaw& law() const { return law_; }

  double elastic_pressure(double rho) const;
  double pressure(double rho, double theta) const;
  double elastic_potential(double rho) const;     // P_e
  double elastic_potential_d(double rho) const;   // P_e'
  double internal_energy(double rho, double theta) const;
  double entropy(double rho, double theta) const;
  double heat_conductivity(double theta) const;
  double kappa_primitive(double theta) const;
  double specific_heat(double theta) const;
  double Q(double theta) const;
  double p_theta(double rho) const;
  double sound_speed(double rho) const;           // elastic part only
  double maxwell_residual(double rho, double theta, double step = 1e-5) const;

private:
  GasParams p_;
  ThermalLaw law_;
};

// Free functions over the standard law.
double pressure(double rho, double theta, const GasParams& p);
double internal_energy(double rho, double theta, const GasParams& p);
double entropy(double rho, double theta, const GasParams& p);
double heat_conductivity(double theta, const GasParams& p);
double kappa_primitive(double theta, const GasParams& p);
double maxwell_residual(double rho, double theta, const GasParams& p);

struct CouplingValues {
  double g, dg, d2g, h, dh, d2h;
};

struct CouplingFns {
  std::function<double(double)> g, dg, d2g;
  std::function<double(double)> h, dh, d2h;
  double z_lo = 0.25;   // supp g' ⊆ [z_lo, z_hi]
  double z_hi = 4.0;
  double z_max = 4.0;   // supp h' ⊆ [0, z_max]

  static CouplingFns standard();
};

CouplingValues coupling_eval(double v, double z, const CouplingFns& fns);

// Quintic smoothstep S(t) = 6t⁵ − 15t⁴ + 10t³ clamped to [0,1], and derivatives.
double smoothstep(double t);
double smoothstep_d(double t);
double smoothstep_d2(double t);

}  // namespace swlw
