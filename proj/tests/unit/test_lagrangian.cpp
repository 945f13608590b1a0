#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "swlw/errors.hpp"
#include "swlw/lagrangian.hpp"

using namespace swlw;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> uniform(std::size_t n, double value) { return std::vector<double>(n, value); }

}  // namespace

TEST(Lagrangian, UnitDensityIsIdentity) {
  const MassMap m = build_map(uniform(65, 1.0));
  EXPECT_NEAR(m.total_mass, 1.0, 1e-15);
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) {
    EXPECT_NEAR(m.y_of_x(x), x, 1e-14);
    EXPECT_NEAR(m.x_of_y(x), x, 1e-14);
  }
}

TEST(Lagrangian, ConstantDensityScales) {
  const MassMap m = build_map(uniform(33, 2.0));
  EXPECT_NEAR(m.total_mass, 2.0, 1e-15);
  for (double x : {0.0, 0.25, 0.6, 1.0}) EXPECT_NEAR(m.y_of_x(x), 2 * x, 1e-14);
  for (double j : map_jacobian(m)) EXPECT_NEAR(j, 2.0, 1e-13);
}

TEST(Lagrangian, VacuumAndRangeErrors) {
  auto rho = uniform(17, 1.0);
  rho[5] = 0.0;
  try {
    build_map(rho);
    FAIL() << "expected VacuumError";
  } catch (const VacuumError& e) {
    EXPECT_NEAR(e.location(), 5.0 / 16, 1e-15);
  }
  const MassMap m = build_map(uniform(17, 1.0));
  EXPECT_THROW(m.x_of_y(1.5), RangeError);
  EXPECT_THROW(m.y_of_x(-0.5), RangeError);
  EXPECT_THROW(build_map(std::vector<double>{1.0}), ShapeError);
}

TEST(Lagrangian, JacobianSecondOrder) {
  auto err = [](std::size_t n) {
    std::vector<double> rho(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rho[i] = 1 + 0.5 * std::sin(2 * kPi * i / n);
    const MassMap m = build_map(rho);
    const auto J = map_jacobian(m);
    double e = 0;
    for (std::size_t i = 1; i < n; ++i) e = std::max(e, std::abs(J[i] - rho[i]));
    return e;
  };
  const double e1 = err(64), e2 = err(128);
  EXPECT_LT(e1, 5e-3);
  EXPECT_GT(e1 / e2, 3.5);
}

TEST(Lagrangian, PushPullRoundTrip) {
  const std::size_t n = 256;
  std::vector<double> rho(n + 1), f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    rho[i] = 1 + 0.5 * std::sin(2 * kPi * x);
    f[i] = std::cos(3 * x) + x * x;
  }
  const MassMap m = build_map(rho);
  // Total mass from the exact antiderivative x − cos(2πx)/(4π) is 1.
  EXPECT_NEAR(m.total_mass, 1.0, 1e-4);
  const auto back = pullback(m, pushforward(m, f, 513));
  double e = 0;
  for (std::size_t i = 0; i <= n; ++i) e = std::max(e, std::abs(back[i] - f[i]));
  EXPECT_LE(e, 1e-6);
}
