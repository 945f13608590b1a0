#pragma once

#include <functional>
#include <string>

namespace swlw {

// Separable space–time weight φ(x,t) = X(x)·τ(t) with τ(t) = (1 − t/T)² on [0,T).
struct TestFunction {
  std::function<double(double)> X, X_x, X_xx;
  double T = 1.0;
  std::string kind;

  double phi(double x, double t) const { return X(x) * tau(t); }
  double phi_t(double x, double t) const { return X(x) * tau_t(t); }
  double phi_x(double x, double t) const { return X_x(x) * tau(t); }
  double phi_xx(double x, double t) const { return X_xx(x) * tau(t); }
  double tau(double t) const;
  double tau_t(double t) const;

  // (1 − ξ²)⁴ with ξ = (x − center)/radius, zero outside.
  static TestFunction bump(double center, double radius, double T);
  // 1 + A·cos(πx/length): nonnegative for |A| ≤ 1, zero slope at both walls.
  static TestFunction neumann(double amplitude, double T, double length = 1.0);
  static TestFunction zero(double T);
};

// φ ≥ 0, φ_x = 0 at the walls, φ(·,T) = 0. Throws ValidationError naming the failure.
void validate_thermal_test(const TestFunction& f, double x0, double x1);
// φ ≥ 0, φ and φ_x vanish at the walls, φ(·,T) = 0.
void validate_compact_test(const TestFunction& f, double x0, double x1);

}  // namespace swlw
