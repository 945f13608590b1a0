#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace swlw {

enum class Frame { Lagrangian, Eulerian };

const char* frame_name(Frame f);
Frame parse_frame(const std::string& s);

// Gridded physical fields tagged with their coordinate frame.
struct FieldSnapshot {
  Frame frame = Frame::Lagrangian;
  double t = 0.0;
  std::vector<double> coords;
  std::vector<std::pair<std::string, std::vector<double>>> fields;

  const std::vector<double>& get(const std::string& name) const;
  bool has(const std::string& name) const;
  void set(const std::string& name, std::vector<double> values);
  bool operator==(const FieldSnapshot& o) const;
};

// Eulerian samples of a viscous state together with their x-derivatives.
struct EulerianFields {
  double t = 0.0;
  std::vector<double> x, y;
  std::vector<double> rho, rho_x, v, u, u_x, theta, theta_x;
  std::vector<double> w[2], w_x[2], h[2], h_x[2];
  std::vector<std::complex<double>> psi, psi_y;

  FieldSnapshot snapshot() const;
};

}  // namespace swlw
