#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "swlw/constitutive.hpp"
#include "swlw/errors.hpp"

using namespace swlw;

namespace {

GasParams defaults() { return GasParams{}; }

bool has_message(const std::vector<std::string>& v, const std::string& text) {
  for (const auto& s : v)
    if (s.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Constitutive, PressureExamples) {
  GasParams p = defaults();
  EXPECT_EQ(pressure(0.0, 5.0, p), 0.0);
  p.delta = 0.0;
  EXPECT_DOUBLE_EQ(pressure(1.0, 0.0, p), 1.0);
  p.delta = 0.1;
  EXPECT_NEAR(pressure(2.0, 1.0, p), 4.2, 1e-14);
  EXPECT_THROW(pressure(-1.0, 1.0, p), DomainError);
  EXPECT_THROW(pressure(1.0, -1.0, p), DomainError);
}

TEST(Constitutive, InternalEnergyExamples) {
  const GasParams p = defaults();
  EXPECT_DOUBLE_EQ(internal_energy(1.0, 0.0, p), 1.0);
  EXPECT_NEAR(internal_energy(1.0, 1.0, p), 2.5, 1e-14);
  EXPECT_EQ(Gas(p).Q(0.0), 0.0);
  EXPECT_THROW(internal_energy(0.0, 1.0, p), DomainError);
}

TEST(Constitutive, EntropyExamples) {
  const GasParams p = defaults();
  EXPECT_NEAR(entropy(1.0, 1.0, p), 0.0, 1e-15);
  EXPECT_NEAR(entropy(std::numbers::e, 1.0, p), -1.0, 1e-14);
  EXPECT_NEAR(entropy(1.0, std::numbers::e, p), std::numbers::e, 1e-14);
  EXPECT_THROW(entropy(0.0, 1.0, p), DomainError);
  EXPECT_THROW(entropy(1.0, 0.0, p), DomainError);
}

TEST(Constitutive, ConductivityExamples) {
  const GasParams p = defaults();
  EXPECT_DOUBLE_EQ(heat_conductivity(0.0, p), p.k1);
  EXPECT_EQ(kappa_primitive(0.0, p), 0.0);
  EXPECT_NEAR(kappa_primitive(1.0, p), 1.2, 1e-14);
  EXPECT_THROW(heat_conductivity(-0.5, p), DomainError);
}

TEST(Constitutive, MaxwellResidualOnGrid) {
  const GasParams p = defaults();
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double rho = 0.1 + 0.2 * i, th = 0.1 * j * j;
      const double scale = std::max(1.0, std::abs(pressure(rho, th, p)) / (rho * rho));
      EXPECT_LE(std::abs(maxwell_residual(rho, th, p)) / scale, 1e-6) << rho << " " << th;
    }
  }
}

TEST(Constitutive, GrowthConditionsSampled) {
  const GasParams p = defaults();
  const Gas gas(p);
  for (int i = 0; i <= 1000; ++i) {
    const double th = 0.1 * i;
    const double k = gas.heat_conductivity(th);
    EXPECT_GE(k, p.k1 * (1 + std::pow(th, p.q)) * (1 - 1e-14));
    EXPECT_LE(k, p.k2 * (1 + std::pow(th, p.q)) * (1 + 1e-14));
    const double c = gas.specific_heat(th);
    EXPECT_GE(c, p.e1 * (1 + std::pow(th, p.r)) * (1 - 1e-14));
    EXPECT_LE(c, p.e2 * (1 + std::pow(th, p.r)) * (1 + 1e-14));
  }
  EXPECT_EQ(gas.p_theta(0.0), 0.0);
  double prev = 0;
  for (int i = 1; i <= 200; ++i) {
    const double rho = 0.05 * i;
    const double pt = gas.p_theta(rho);
    EXPECT_GE(pt, prev);
    // p_θ(ρ) ≤ p0(1 + ρ^Γ)
    EXPECT_LE(pt, p.p0 * (1 + std::pow(rho, p.Gamma)) + 1e-14);
    prev = pt;
  }
}

TEST(Constitutive, EntropyMonotoneInEachArgument) {
  const GasParams p = defaults();
  for (int i = 1; i < 40; ++i) {
    for (int j = 1; j < 40; ++j) {
      const double rho = 0.1 * i, th = 0.1 * j;
      EXPECT_GT(entropy(rho, th + 0.1, p), entropy(rho, th, p));
      EXPECT_LT(entropy(rho + 0.1, th, p), entropy(rho, th, p));
    }
  }
}

TEST(Constitutive, CouplingSupports) {
  const CouplingFns c = CouplingFns::standard();
  EXPECT_EQ(c.g(0.0), 0.0);
  EXPECT_EQ(c.h(0.0), 0.0);
  EXPECT_EQ(c.dg(8.0), 0.0);
  EXPECT_EQ(c.dh(5.0), 0.0);
  for (int i = 0; i < 1000; ++i) {
    const double z = 10.0 * i / 999.0;
    if (z < c.z_lo || z > c.z_hi) {
      EXPECT_EQ(c.dg(z), 0.0) << z;
    }
    if (z > c.z_max) {
      EXPECT_EQ(c.dh(z), 0.0) << z;
    }
    EXPECT_GE(c.g(z), 0.0);
    EXPECT_GE(c.h(z), 0.0);
  }
  const CouplingValues v = coupling_eval(1.0, 1.0, c);
  EXPECT_DOUBLE_EQ(v.g, c.g(1.0));
  EXPECT_DOUBLE_EQ(v.dh, c.dh(1.0));
  EXPECT_THROW(coupling_eval(-1.0, 0.0, c), DomainError);
}

TEST(Constitutive, CouplingDerivativesMatchDifferences) {
  const CouplingFns c = CouplingFns::standard();
  const double h = 1e-5;
  for (double z : {0.3, 0.9, 1.7, 2.5, 3.6}) {
    EXPECT_NEAR(c.dg(z), (c.g(z + h) - c.g(z - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(c.d2g(z), (c.dg(z + h) - c.dg(z - h)) / (2 * h), 1e-6);
    EXPECT_NEAR(c.dh(z), (c.h(z + h) - c.h(z - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(c.d2h(z), (c.dh(z + h) - c.dh(z - h)) / (2 * h), 1e-6);
  }
}

TEST(Constitutive, ViolationsAreNamed) {
  GasParams p = defaults();
  p.q = 3;
  p.gamma = 1;
  const auto v = p.violations();
  EXPECT_TRUE(has_message(v, "q >= 2+2r violated: q=3, r=1"));
  EXPECT_TRUE(has_message(v, "gamma > 1 required"));
  EXPECT_THROW(p.validate(), ValidationError);
  GasParams ok = defaults();
  EXPECT_TRUE(ok.violations().empty());
  ok.epsilon = 0;
  EXPECT_FALSE(ok.violations(true).empty());
  EXPECT_TRUE(ok.violations(false).empty());
}

TEST(Constitutive, DerivedExponents) {
  GasParams p = defaults();
  EXPECT_DOUBLE_EQ(p.vartheta(), 0.5);
  EXPECT_DOUBLE_EQ(p.Lambda(), 0.5);
  p.gamma = 3;
  EXPECT_DOUBLE_EQ(p.Lambda(), 0.0);
}
