#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swlw/constitutive.hpp"
#include "swlw/fields.hpp"
#include "swlw/quadrature.hpp"
#include "swlw/test_functions.hpp"

namespace swlw {

// Generator ζ of a weak entropy pair, with two derivatives.
struct Zeta {
  std::string id;
  std::function<double(double)> f, df, d2f;
  int degree = -1;  // polynomial degree, or −1 if not a polynomial
  std::optional<std::pair<double, double>> support;
  std::vector<double> breakpoints;  // points where ζ is not smooth

  bool polynomial() const { return degree >= 0; }

  // Ids: "+1", "-1", "+s", "-s", "s2" and "sharp" (ζ(z) = ½z|z|).
  static Zeta builtin(const std::string& id);
  static const std::vector<std::string>& builtin_ids();
  // ((z−a)(b−z))³ on [a,b], zero outside; C² with compact support.
  static Zeta bump(double a, double b);
};

struct EntropyPairSpec {
  Zeta zeta;
  double gamma = 2.0;
  double wave_scale = 1.0;  // k in χ = [(kρ^ϑ)² − (s−u)²]₊^Λ
  int nodes = 32;
  double tolerance = 1e-10;  // Richardson tolerance for non-polynomial ζ
  QuadratureRule rule;       // Gauss–Jacobi, weight (1−s²)^Λ
  double normalization = 0;  // η^{s²} / η*, measured once

  double vartheta() const { return 0.5 * (gamma - 1.0); }
  double Lambda() const { return (3.0 - gamma) / (2.0 * (gamma - 1.0)); }
  double weight_mass() const;  // ∫(1−s²)^Λ ds

  // Wave scale matched to p = aρ^γ so that the pairs are entropy pairs of that system.
  static EntropyPairSpec make(Zeta zeta, const GasParams& p, int nodes = 32);
  // Wave scale 1, i.e. the normalized pressure a = ϑ²/γ.
  static EntropyPairSpec canonical(Zeta zeta, double gamma, int nodes = 32);
};

double chi(double rho, double u, double s, const EntropyPairSpec& spec);

struct EntropyPair {
  double eta = 0, q = 0;
};

struct EntropyDerivatives {
  double eta_m = 0, eta_mu = 0, eta_mrho = 0;
};

EntropyPair entropy_pair(double rho, double m, const EntropyPairSpec& spec);
EntropyDerivatives entropy_derivatives(double rho, double m, const EntropyPairSpec& spec);

// η* = m²/(2ρ) + ρP_e(ρ), q* = m³/(2ρ²) + mP_e + ρmP_e'.
EntropyPair mechanical_pair(double rho, double m, const GasParams& p);

struct PairBoundsReport {
  std::size_t samples = 0;
  double max_ratio = 0;          // sup (|η|+|q|)/ρ over samples with ρ > 0
  double analytic_bound = -1;    // explicit C_ζ when ζ has compact support and Λ ≥ 0
  std::size_t support_violations = 0;  // nonzero pair outside the support strip
  std::size_t vacuum_violations = 0;   // nonzero pair at ρ = 0
  bool ok() const;
};

PairBoundsReport pair_bounds_check(const EntropyPairSpec& spec,
                                   const std::vector<std::pair<double, double>>& rho_u);

struct DissipationBalance {
  double weak = 0;    // ∬(ηφ_t + qφ_x) + ∫η₀φ₀
  double eps = 0, delta = 0, beta = 0, alpha = 0;
  double residual = 0;  // weak + all groups
};

// Snapshots on a common uniform Eulerian grid, increasing in time.
DissipationBalance dissipation_balance_residual(const std::vector<EulerianFields>& traj,
                                                const EntropyPairSpec& spec,
                                                const TestFunction& phi, const GasParams& p,
                                                const CouplingFns& coupling);
DissipationBalance dissipation_balance_residual(const std::vector<FieldSnapshot>& traj,
                                                const EntropyPairSpec& spec,
                                                const TestFunction& phi, const GasParams& p,
                                                const CouplingFns& coupling);

// Fourth-order central differences on a uniform Eulerian snapshot.
EulerianFields eulerian_from_snapshot(const FieldSnapshot& s);

}  // namespace swlw
