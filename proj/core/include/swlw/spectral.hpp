#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace swlw {

using cvec = std::vector<std::complex<double>>;

// Collocation grid y_j = jL/M, j = 0..M, with sine basis sin(kπy/L), k = 1..M−1,
// and cosine basis cos(kπy/L), k = 0..M. Transforms are discrete (trapezoid) and exact
// on the span.
class SpectralGrid {
public:
  SpectralGrid(int M, double L);

  int M() const { return M_; }
  double length() const { return L_; }
  const std::vector<double>& nodes() const { return y_; }
  const std::vector<double>& weights() const { return w_; }
  double wavenumber(int k) const;

  // (2/L) Σ_j w_j f_j cos(kπy_j/L), k = 0..M (no halving at k = 0 or M).
  std::vector<double> cosine_transform(const std::vector<double>& f) const;
  // (2/L) Σ_j w_j f_j sin(kπy_j/L), k = 1..M−1, stored at index k−1.
  std::vector<double> sine_transform(const std::vector<double>& f) const;

  // Discrete projections onto the first n modes.
  std::vector<double> project_sine(const std::vector<double>& f, int n) const;
  std::vector<double> project_cosine(const std::vector<double>& f, int n) const;
  cvec project_sine(const cvec& f, int n) const;

  // Nodal evaluation of Σ s_k sin(kπy/L), coefficients for k = 1..len.
  std::vector<double> synth_sine(const std::vector<double>& coef) const;
  cvec synth_sine(const cvec& coef) const;
  // Nodal evaluation of Σ c_k cos(kπy/L), coefficients for k = 0..len−1.
  std::vector<double> synth_cosine(const std::vector<double>& coef) const;

  // y-derivatives of the above series, evaluated at the nodes.
  std::vector<double> synth_sine_dy(const std::vector<double>& coef) const;
  cvec synth_sine_dy(const cvec& coef) const;
  std::vector<double> synth_cosine_dy(const std::vector<double>& coef) const;

  // Sine coefficients of F_y for a nodal F, by summation by parts: −κ_k·Ĉ_k(F).
  std::vector<double> sine_of_derivative(const std::vector<double>& F, int n) const;

  double integrate(const std::vector<double>& f) const;

private:
  struct Plans;
  int M_;
  double L_;
  std::vector<double> y_, w_;
  std::shared_ptr<Plans> plans_;
};

// Pointwise evaluation of sine / cosine series at arbitrary y.
double eval_sine(const std::vector<double>& coef, double L, double y);
double eval_sine_dy(const std::vector<double>& coef, double L, double y);
double eval_cosine(const std::vector<double>& coef, double L, double y);
double eval_cosine_dy(const std::vector<double>& coef, double L, double y);

}  // namespace swlw
