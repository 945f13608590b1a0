#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "swlw/entropy_pairs.hpp"
#include "swlw/errors.hpp"

using namespace swlw;

namespace {

constexpr double kPi = std::numbers::pi;

// ∫(1−s²)^Λ ds = B(1/2, Λ+1).
double weight_mass(double gamma) {
  const double L = (3 - gamma) / (2 * (gamma - 1));
  return std::beta(0.5, L + 1);
}

GasParams gas(double gamma) {
  GasParams p;
  p.gamma = gamma;
  p.Gamma = std::min(1.0, gamma / 2);
  return p;
}

}  // namespace

TEST(EntropyPairs, KernelExamples) {
  const auto s2 = EntropyPairSpec::canonical(Zeta::builtin("+1"), 2.0);
  EXPECT_EQ(chi(0.0, 0.3, 0.1, s2), 0.0);
  EXPECT_EQ(chi(0.0, -2.0, 5.0, s2), 0.0);
  EXPECT_DOUBLE_EQ(chi(1.0, 0.0, 0.0, s2), 1.0);
  EXPECT_EQ(chi(1.0, 0.0, 1.5, s2), 0.0);
  const auto s3 = EntropyPairSpec::canonical(Zeta::builtin("+1"), 3.0);
  EXPECT_EQ(chi(1.0, 0.0, 0.5, s3), 1.0);
  EXPECT_EQ(chi(1.0, 0.0, 1.0001, s3), 0.0);
  EXPECT_THROW(chi(-1.0, 0.0, 0.0, s2), DomainError);
  const auto s4 = EntropyPairSpec::canonical(Zeta::builtin("+1"), 4.0);
  EXPECT_THROW(chi(1.0, 0.0, 1.0, s4), DomainError);
}

TEST(EntropyPairs, ConstantGeneratorIsBetaIntegral) {
  const auto spec = EntropyPairSpec::canonical(Zeta::builtin("+1"), 2.0);
  const EntropyPair e = entropy_pair(1.0, 0.0, spec);
  EXPECT_NEAR(e.eta, kPi / 2, 1e-14);
  EXPECT_NEAR(e.q, 0.0, 1e-14);
  for (double g : {1.4, 5.0 / 3.0, 2.5, 3.0}) {
    const auto sp = EntropyPairSpec::canonical(Zeta::builtin("+1"), g);
    EXPECT_NEAR(entropy_pair(2.0, 1.0, sp).eta, 2.0 * weight_mass(g), 1e-12) << g;
  }
}

TEST(EntropyPairs, LinearGeneratorGivesMomentum) {
  const auto spec = EntropyPairSpec::make(Zeta::builtin("+s"), gas(1.4));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> R(0.01, 4), U(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const double rho = R(rng), u = U(rng);
    EXPECT_NEAR(entropy_pair(rho, rho * u, spec).eta, rho * u * weight_mass(1.4), 1e-12);
  }
}

TEST(EntropyPairs, VacuumIsZero) {
  for (const auto& id : Zeta::builtin_ids()) {
    const auto spec = EntropyPairSpec::make(Zeta::builtin(id), gas(2.0));
    const EntropyPair e = entropy_pair(0.0, 0.0, spec);
    EXPECT_EQ(e.eta, 0.0) << id;
    EXPECT_EQ(e.q, 0.0) << id;
  }
  EXPECT_THROW(entropy_pair(-0.1, 0.0, EntropyPairSpec::canonical(Zeta::builtin("s2"), 2.0)), DomainError);
}

TEST(EntropyPairs, MechanicalPairExamples) {
  const GasParams p = gas(2.0);
  EXPECT_DOUBLE_EQ(mechanical_pair(1.0, 0.0, p).eta, 1.0);
  EXPECT_DOUBLE_EQ(mechanical_pair(2.0, 2.0, p).eta, 5.0);
  const EntropyPair z = mechanical_pair(0.0, 0.0, p);
  EXPECT_EQ(z.eta, 0.0);
  EXPECT_EQ(z.q, 0.0);
}

TEST(EntropyPairs, QuadraticGeneratorIsScaledMechanicalEnergy) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> R(0.05, 4), U(-3, 3);
  for (double g : {1.4, 2.0, 3.0}) {
    GasParams p = gas(g);
    p.a = 0.7;
    const auto spec = EntropyPairSpec::make(Zeta::builtin("s2"), p);
    const double ratio = 2 * weight_mass(g);
    EXPECT_NEAR(spec.normalization, ratio, 1e-12);
    for (int i = 0; i < 100; ++i) {
      const double rho = R(rng), m = rho * U(rng);
      const EntropyPair e = entropy_pair(rho, m, spec);
      const EntropyPair s = mechanical_pair(rho, m, p);
      EXPECT_NEAR(e.eta, ratio * s.eta, 1e-11 * std::max(1.0, std::abs(e.eta)));
      EXPECT_NEAR(e.q, ratio * s.q, 1e-11 * std::max(1.0, std::abs(e.q)));
    }
  }
}

TEST(EntropyPairs, NodeDoublingIsStable) {
  for (const std::string id : {"s2", "sharp"}) {
    const auto a = EntropyPairSpec::make(Zeta::builtin(id), gas(1.4), 32);
    const auto b = EntropyPairSpec::make(Zeta::builtin(id), gas(1.4), 64);
    for (double rho : {0.1, 1.0, 3.0}) {
      for (double u : {-1.0, 0.2, 2.0}) {
        const EntropyPair ea = entropy_pair(rho, rho * u, a), eb = entropy_pair(rho, rho * u, b);
        EXPECT_LE(std::abs(ea.eta - eb.eta), 1e-10) << id;
        EXPECT_LE(std::abs(ea.q - eb.q), 1e-10) << id;
      }
    }
  }
  const auto c = EntropyPairSpec::make(Zeta::bump(-1, 1), gas(2.0), 32);
  const auto d = EntropyPairSpec::make(Zeta::bump(-1, 1), gas(2.0), 64);
  EXPECT_LE(std::abs(entropy_pair(1.0, 0.5, c).eta - entropy_pair(1.0, 0.5, d).eta), 1e-10);
}

TEST(EntropyPairs, DerivativesMatchDifferences) {
  const auto spec = EntropyPairSpec::make(Zeta::bump(-1, 1), gas(2.0));
  const double rho = 0.8, m = 0.3, h = 1e-5;
  const EntropyDerivatives d = entropy_derivatives(rho, m, spec);
  const double fd = (entropy_pair(rho, m + h, spec).eta - entropy_pair(rho, m - h, spec).eta) / (2 * h);
  EXPECT_NEAR(d.eta_m, fd, 1e-7);
}

TEST(EntropyPairs, SupportIsExact) {
  const auto spec = EntropyPairSpec::make(Zeta::bump(-1, 1), gas(2.0));
  // c = wave_scale·ρ^ϑ; pick u so that [u−c, u+c] misses [−1, 1].
  for (double rho : {0.1, 1.0, 2.0}) {
    const double c = spec.wave_scale * std::pow(rho, spec.vartheta());
    for (double u : {1.0 + c + 1e-9, -1.0 - c - 0.5, 10.0}) {
      const EntropyPair e = entropy_pair(rho, rho * u, spec);
      EXPECT_EQ(e.eta, 0.0);
      EXPECT_EQ(e.q, 0.0);
    }
  }
}

TEST(EntropyPairs, BoundsHoldOnRandomSamples) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> R(0, 4), U(-3, 3);
  for (double g : {1.4, 2.0, 3.0}) {
    const auto spec = EntropyPairSpec::make(Zeta::bump(-1, 1), gas(g));
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 10000; ++i) samples.emplace_back(i % 50 == 0 ? 0.0 : R(rng), U(rng));
    const PairBoundsReport r = pair_bounds_check(spec, samples);
    EXPECT_EQ(r.samples, 10000u);
    EXPECT_EQ(r.support_violations, 0u);
    EXPECT_EQ(r.vacuum_violations, 0u);
    EXPECT_GT(r.analytic_bound, 0.0);
    EXPECT_LE(r.max_ratio, r.analytic_bound) << g;
    EXPECT_TRUE(r.ok());
  }
}

TEST(EntropyPairs, UnsupportedGamma) {
  EXPECT_THROW(EntropyPairSpec::make(Zeta::builtin("s2"), gas(3.5)), UnsupportedError);
  GasParams p = gas(1.0);
  EXPECT_THROW(EntropyPairSpec::make(Zeta::builtin("s2"), p), ValidationError);
  EXPECT_THROW(Zeta::builtin("cubic"), ValidationError);
}

TEST(EntropyPairs, ConstantTrajectoryHasZeroGroups) {
  GasParams p = gas(2.0);
  const auto spec = EntropyPairSpec::make(Zeta::builtin("s2"), p);
  const auto phi = TestFunction::bump(0.5, 0.3, 0.1);
  std::vector<FieldSnapshot> traj;
  const std::size_t n = 201;
  for (int k = 0; k <= 10; ++k) {
    FieldSnapshot s;
    s.frame = Frame::Eulerian;
    s.t = 0.01 * k;
    for (std::size_t i = 0; i < n; ++i) s.coords.push_back(static_cast<double>(i) / (n - 1));
    s.set("rho", std::vector<double>(n, 1.0));
    s.set("u", std::vector<double>(n, 0.0));
    s.set("theta", std::vector<double>(n, 1.0));
    traj.push_back(s);
  }
  const DissipationBalance b =
      dissipation_balance_residual(traj, spec, phi, p, CouplingFns::standard());
  EXPECT_EQ(b.eps, 0.0);
  EXPECT_EQ(b.beta, 0.0);
  EXPECT_EQ(b.alpha, 0.0);
  EXPECT_NEAR(b.delta, 0.0, 1e-14);
  EXPECT_LE(std::abs(b.residual), 1e-12);
  traj[3].frame = Frame::Lagrangian;
  EXPECT_THROW(dissipation_balance_residual(traj, spec, phi, p, CouplingFns::standard()), ValidationError);
}
