#pragma once

#include <complex>
#include <functional>
#include <string>

namespace swlw {

struct InitialData {
  std::string profile = "smooth-periodic";
  double rho_mean = 1.0;
  double rho_amplitude = 0.2;
  double u_amplitude = 0.1;
  double w_amplitude = 0.05;
  double h_amplitude = 0.05;
  double theta_mean = 1.0;
  double theta_amplitude = 0.1;
  double psi_amplitude = 0.5;
  double psi_amplitude2 = 0.2;
  double psi_center = 0.5;
  double psi_width = 0.1;
  bool mollify = false;
  double mollify_scale = 1.0;  // heat-kernel time is mollify_scale·ε

  void validate() const;
};

// Eulerian data on x ∈ [0,1]; ψ is given in the scaled mass coordinate ξ = y/d ∈ [0,1].
struct Profile {
  std::function<double(double)> rho, mass, u, theta;
  std::function<double(double)> w[2], h[2];
  std::function<std::complex<double>(double)> psi;

  double total_mass() const { return mass(1.0); }
  double x_of_mass(double y) const;  // inverse of the mass primitive
};

Profile make_profile(const InitialData& d, double epsilon);

}  // namespace swlw
