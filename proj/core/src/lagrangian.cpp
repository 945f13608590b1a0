#include "swlw/lagrangian.hpp"

#include <cmath>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

bool uniform(const std::vector<double>& x) {
  const double dx = (x.back() - x.front()) / (x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - (x.front() + i * dx)) > 1e-12 * std::max(1.0, std::abs(x.back())))
      return false;
  return true;
}

}  // namespace

double MassMap::y_of_x(double x) const {
  const double tol = 1e-12 * std::max(1.0, std::abs(x_nodes.back()));
  if (x < x_nodes.front() - tol || x > x_nodes.back() + tol)
    throw RangeError("x outside the mapped interval");
  return forward(x);
}

double MassMap::x_of_y(double y) const {
  const double tol = 1e-12 * std::max(1.0, total_mass);
  if (y < -tol || y > total_mass + tol) throw RangeError("y outside [0, total_mass]");
  return inverse(y);
}

MassMap build_map(const std::vector<double>& x_nodes, const std::vector<double>& rho,
                  double rho_min) {
  if (x_nodes.size() != rho.size() || rho.size() < 2)
    throw ShapeError("build_map: need >= 2 matching nodes");
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] >= rho_min)) throw VacuumError(x_nodes[i], rho[i]);
  MassMap m;
  m.x_nodes = x_nodes;
  m.rho_nodes = rho;
  m.y_values.assign(rho.size(), 0.0);
  for (std::size_t i = 1; i < rho.size(); ++i)
    m.y_values[i] = m.y_values[i - 1] + 0.5 * (rho[i] + rho[i - 1]) * (x_nodes[i] - x_nodes[i - 1]);
  m.total_mass = m.y_values.back();
  m.forward = Pchip(m.x_nodes, m.y_values);
  m.inverse = Pchip(m.y_values, m.x_nodes);
  return m;
}

MassMap build_map(const std::vector<double>& rho, double rho_min) {
  if (rho.size() < 2) throw ShapeError("build_map: need >= 2 nodes");
  std::vector<double> x(rho.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i) / (x.size() - 1);
  return build_map(x, rho, rho_min);
}

std::vector<double> pullback(const MassMap& map, const std::vector<double>& f_of_y) {
  if (f_of_y.size() < 2) throw ShapeError("pullback: need >= 2 samples");
  const double dy = map.total_mass / (f_of_y.size() - 1);
  std::vector<double> out(map.x_nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double y = map.y_values[i];
    if (y < -1e-12 || y > map.total_mass * (1 + 1e-12)) throw RangeError("pullback: y out of range");
    out[i] = lagrange_uniform(f_of_y, 0.0, dy, y, 6);
  }
  return out;
}

std::vector<double> pushforward(const MassMap& map, const std::vector<double>& f_of_x,
                                std::size_t count) {
  if (f_of_x.size() != map.x_nodes.size()) throw ShapeError("pushforward: field/grid mismatch");
  if (count == 0) count = f_of_x.size();
  if (count < 2) throw ShapeError("pushforward: need >= 2 output samples");
  const auto& xs = map.x_nodes;
  const bool is_uniform = uniform(xs);
  const double dx = (xs.back() - xs.front()) / (xs.size() - 1);
  Pchip fit;
  if (!is_uniform) fit = Pchip(xs, f_of_x);
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double x = map.x_of_y(map.total_mass * j / (count - 1));
    out[j] = is_uniform ? lagrange_uniform(f_of_x, xs.front(), dx, x, 6) : fit(x);
  }
  return out;
}

std::vector<double> map_jacobian(const MassMap& map) {
  const auto& x = map.x_nodes;
  const auto& y = map.y_values;
  const std::size_t n = x.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
  d[0] = (y[1] - y[0]) / (x[1] - x[0]);
  d[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  if (n >= 3) {
    d[0] = (-3 * y[0] + 4 * y[1] - y[2]) / (x[2] - x[0]);
    d[n - 1] = (3 * y[n - 1] - 4 * y[n - 2] + y[n - 3]) / (x[n - 1] - x[n - 3]);
  }
  return d;
}

}  // namespace swlw
