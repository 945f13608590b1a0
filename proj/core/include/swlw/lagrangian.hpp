#pragma once

#include <vector>

#include "swlw/interpolation.hpp"

namespace swlw {

inline constexpr double kRhoFloor = 1e-10;

// Mass coordinate y(x) = ∫₀^x ρ on an ascending x grid.
struct MassMap {
  std::vector<double> x_nodes;
  std::vector<double> y_values;
  double total_mass = 0.0;
  std::vector<double> rho_nodes;

  double y_of_x(double x) const;
  double x_of_y(double y) const;

  Pchip forward;   // x ↦ y
  Pchip inverse;   // y ↦ x
};

// Trapezoid cumulative integral; VacuumError if any node is below the floor.
MassMap build_map(const std::vector<double>& x_nodes, const std::vector<double>& rho,
                  double rho_min = kRhoFloor);
// Uniform grid on [0,1].
MassMap build_map(const std::vector<double>& rho, double rho_min = kRhoFloor);

// f sampled on the uniform y grid of [0, total_mass] (any count ≥ 2) -> values at x_nodes.
std::vector<double> pullback(const MassMap& map, const std::vector<double>& f_of_y);
// f sampled at x_nodes -> values on the uniform y grid of [0, total_mass] with `count` points.
std::vector<double> pushforward(const MassMap& map, const std::vector<double>& f_of_x,
                                std::size_t count = 0);

// Centered-difference dy/dx at the nodes (one-sided at the ends).
std::vector<double> map_jacobian(const MassMap& map);

}  // namespace swlw
