#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "swlw/interpolation.hpp"
#include "swlw/quadrature.hpp"

using namespace swlw;

namespace {

// ∫_{-1}^{1} s^k (1−s²)^L ds through the Beta function.
double symmetric_moment(int k, double L) {
  if (k % 2) return 0.0;
  return std::beta(0.5 * (k + 1), L + 1.0);
}

}  // namespace

TEST(Quadrature, GaussJacobiMomentsExact) {
  for (double L : {-0.3, 0.0, 0.5, 1.25, 2.0}) {
    const int n = 12;
    const QuadratureRule r = gauss_jacobi(n, L, L);
    EXPECT_EQ(r.exact_degree, 2 * n - 1);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = symmetric_moment(k, L);
      EXPECT_NEAR(q, exact, 1e-13 * std::max(1.0, std::abs(exact))) << "L=" << L << " k=" << k;
    }
  }
}

TEST(Quadrature, AsymmetricWeight) {
  const QuadratureRule r = gauss_jacobi(8, 1.5, -0.5);
  double m0 = 0;
  for (double w : r.weights) m0 += w;
  const double exact = std::pow(2.0, 2.0) * std::beta(2.5, 0.5);
  EXPECT_NEAR(m0, exact, 1e-13);
  EXPECT_NEAR(jacobi_moment0(1.5, -0.5), exact, 1e-13);
}

TEST(Quadrature, NodesSortedInside) {
  const QuadratureRule r = gauss_jacobi(20, 0.5, 0.5);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    EXPECT_GT(r.nodes[i], -1.0);
    EXPECT_LT(r.nodes[i], 1.0);
    EXPECT_GT(r.weights[i], 0.0);
    if (i) {
      EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    }
  }
}

TEST(Quadrature, SemicircleIsHalfPi) {
  const QuadratureRule r = gauss_jacobi(4, 0.5, 0.5);
  double s = 0;
  for (double w : r.weights) s += w;
  EXPECT_NEAR(s, std::numbers::pi / 2, 1e-14);
}

TEST(Quadrature, LegendreIntegratesPolynomials) {
  const QuadratureRule r = gauss_legendre(16);
  double s = 0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 30);
  EXPECT_NEAR(s, 2.0 / 31.0, 1e-14);
}

TEST(Interpolation, PchipReproducesLinesAndKeepsMonotonicity) {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    x.push_back(0.05 * i);
    y.push_back(2.0 * x.back() + 1.0);
  }
  const Pchip line(x, y);
  for (double q : {0.0, 0.013, 0.5, 0.777, 1.0}) {
    EXPECT_NEAR(line(q), 2 * q + 1, 1e-14);
    EXPECT_NEAR(line.derivative(q), 2.0, 1e-12);
  }
  std::vector<double> ys = {0, 0, 0, 1, 1, 1};
  std::vector<double> xs = {0, 1, 2, 3, 4, 5};
  const Pchip step(xs, ys);
  double prev = -1;
  for (int i = 0; i <= 500; ++i) {
    const double v = step(0.01 * i);
    EXPECT_GE(v, prev - 1e-15);
    EXPECT_GE(v, -1e-15);
    EXPECT_LE(v, 1 + 1e-15);
    prev = v;
  }
}

TEST(Interpolation, LagrangeUniformOrder) {
  std::vector<double> f;
  const double dx = 0.01;
  for (int i = 0; i <= 100; ++i) f.push_back(std::sin(3.0 * i * dx));
  for (double q : {0.0, 0.004, 0.3333, 0.9951, 1.0})
    EXPECT_NEAR(lagrange_uniform(f, 0.0, dx, q), std::sin(3.0 * q), 1e-10);
}
