#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "swlw/errors.hpp"
#include "swlw/galerkin.hpp"
#include "swlw/simulation.hpp"

using namespace swlw;

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

// Unit mass, so the mass coordinate runs over [0,1].
SolverConfig flat_config(int n = 8) {
  SolverConfig c;
  c.n = n;
  c.initial.profile = "constant";
  c.initial.rho_mean = 1.0;
  c.initial.theta_mean = 1.0;
  c.params.alpha = 0.0;
  c.params.beta = 0.0;
  c.t_end = 0.0;
  return c;
}

struct Nodal {
  std::vector<double> u, th, v;
  std::array<std::vector<double>, 2> w, h;
  cvec psi;
};

Nodal rest(const GalerkinSolver& s) {
  const std::size_t m = s.grid().M() + 1;
  Nodal f;
  f.u.assign(m, 0.0);
  f.th.assign(m, 1.0);
  f.v.assign(m, 1.0);
  f.w = {std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
  f.h = f.w;
  f.psi.assign(m, {0.0, 0.0});
  return f;
}

GalerkinState make(const GalerkinSolver& s, const Nodal& f) {
  return s.project(f.u, f.w, f.h, f.th, f.psi, f.v);
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(Galerkin, ViscousDecayOfSingleVelocityMode) {
  const SolverConfig cfg = flat_config();
  const GalerkinSolver solver(cfg);
  ASSERT_NEAR(solver.length(), 1.0, 1e-15);
  const double c = 0.3, eps = cfg.params.epsilon;
  Nodal f = rest(solver);
  for (int j = 0; j <= solver.grid().M(); ++j) f.u[j] = c * std::sin(kPi * solver.grid().nodes()[j]);
  const GalerkinState d = solver.assemble_rhs(make(solver, f));
  EXPECT_NEAR(d.u[0], -eps * kPi * kPi * c, 1e-12);
  for (int k = 1; k < cfg.n; ++k) EXPECT_NEAR(d.u[k], 0.0, 1e-12);
  for (int j = 0; j <= solver.grid().M(); ++j)
    EXPECT_NEAR(d.v[j], c * kPi * std::cos(kPi * solver.grid().nodes()[j]), 1e-12);
}

TEST(Galerkin, EquilibriumHasZeroRhs) {
  const GalerkinSolver solver(flat_config());
  const GalerkinState s = solver.initial_state();
  const GalerkinState d = solver.assemble_rhs(s);
  EXPECT_LE(max_abs(d.u), 1e-13);
  EXPECT_LE(max_abs(d.theta), 1e-13);
  EXPECT_LE(max_abs(d.v), 1e-13);
  for (int c = 0; c < 2; ++c) {
    EXPECT_LE(max_abs(d.w[c]), 1e-13);
    EXPECT_LE(max_abs(d.h[c]), 1e-13);
  }
  for (const auto& z : d.psi) EXPECT_LE(std::abs(z), 1e-13);
  const GalerkinState s1 = solver.step(s);
  for (std::size_t j = 0; j < s.v.size(); ++j) EXPECT_NEAR(s1.v[j], s.v[j], 1e-14);
  for (std::size_t k = 0; k < s.theta.size(); ++k) EXPECT_NEAR(s1.theta[k], s.theta[k], 1e-14);
  EXPECT_LE(max_abs(s1.u), 1e-14);
}

TEST(Galerkin, SchrodingerSingleModeLinearAndCubic) {
  const GalerkinSolver solver(flat_config());
  const cd c(0.3, 0.4);
  Nodal f = rest(solver);
  for (int j = 0; j <= solver.grid().M(); ++j) f.psi[j] = c * std::sin(kPi * solver.grid().nodes()[j]);
  const GalerkinState d = solver.assemble_rhs(make(solver, f));
  // |ψ|²ψ = |c|²c sin³ = |c|²c (3 sin πy − sin 3πy)/4.
  const cd cube = std::norm(c) * c;
  const cd I(0.0, 1.0);
  EXPECT_NEAR(std::abs(d.psi[0] - (-I * (kPi * kPi * c + 0.75 * cube))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(d.psi[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(d.psi[2] - (-I * (-0.25 * cube))), 0.0, 1e-12);
}

TEST(Galerkin, CubicTermMatchesFineQuadrature) {
  const int n = 6;
  const GalerkinSolver solver(flat_config(n));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<cd> a(n);
  for (auto& z : a) z = {u(rng), u(rng)};
  auto psi_at = [&](double y) {
    cd s = 0;
    for (int k = 1; k <= n; ++k) s += a[k - 1] * std::sin(k * kPi * y);
    return s;
  };
  Nodal f = rest(solver);
  for (int j = 0; j <= solver.grid().M(); ++j) f.psi[j] = psi_at(solver.grid().nodes()[j]);
  const GalerkinState d = solver.assemble_rhs(make(solver, f));
  const int fine = 12 * n;
  for (int k = 1; k <= n; ++k) {
    cd proj = 0;
    for (int j = 1; j < fine; ++j) {
      const double y = static_cast<double>(j) / fine;
      const cd p = psi_at(y);
      proj += std::norm(p) * p * std::sin(k * kPi * y) / static_cast<double>(fine);
    }
    proj *= 2.0;
    const cd expect = cd(0, -1) * (k * k * kPi * kPi * a[k - 1] + proj);
    EXPECT_NEAR(std::abs(d.psi[k - 1] - expect), 0.0, 1e-10) << k;
  }
}

TEST(Galerkin, SingleModeStepMatchesExponential) {
  for (Integrator integ : {Integrator::RK4, Integrator::LawsonRK4}) {
    SolverConfig cfg = flat_config();
    cfg.params.a = 1e-10;
    cfg.params.delta = 0.0;
    cfg.integrator = integ;
    const GalerkinSolver solver(cfg);
    const double c = 1e-3;
    Nodal f = rest(solver);
    for (int j = 0; j <= solver.grid().M(); ++j) f.u[j] = c * std::sin(kPi * solver.grid().nodes()[j]);
    const GalerkinState s1 = solver.step(make(solver, f));
    const double expect = c * std::exp(-cfg.params.epsilon * kPi * kPi * cfg.dt);
    EXPECT_NEAR(s1.u[0] / expect, 1.0, 1e-10) << integrator_name(integ);
  }
}

TEST(Galerkin, NonPositiveVolumeRaises) {
  const GalerkinSolver solver(flat_config());
  Nodal f = rest(solver);
  f.v[4] = -0.1;
  try {
    solver.assemble_rhs(make(solver, f));
    FAIL() << "expected PositivityError";
  } catch (const PositivityError& e) {
    EXPECT_EQ(e.field(), "v");
    EXPECT_NEAR(e.location(), solver.grid().nodes()[4], 1e-15);
  }
  Nodal g = rest(solver);
  g.th.assign(g.th.size(), -1.0);
  EXPECT_THROW(solver.assemble_rhs(make(solver, g)), PositivityError);
}

TEST(Galerkin, ZeroDurationRunGivesOnlyInitialSnapshot) {
  const SolverConfig cfg = flat_config();
  int snaps = 0;
  RunCallbacks cb;
  cb.on_snapshot = [&](const GalerkinSolver&, const GalerkinState& s) {
    ++snaps;
    EXPECT_EQ(s.t, 0.0);
  };
  const RunResult r = run(cfg, cb);
  EXPECT_EQ(snaps, 1);
  EXPECT_EQ(r.steps, 0);
  ASSERT_EQ(r.monitors.size(), 1u);
}

TEST(Galerkin, DealiasRequiresEnoughCollocationPoints) {
  SolverConfig cfg = flat_config(8);
  cfg.collocation_points = 12;
  EXPECT_THROW(GalerkinSolver{cfg}, ValidationError);
  cfg.dealias = false;
  EXPECT_NO_THROW(GalerkinSolver{cfg});
}

TEST(Galerkin, ReconstructAtNodesMatchesNodal) {
  SolverConfig cfg = flat_config();
  cfg.initial.profile = "smooth-periodic";
  cfg.params.alpha = 1.0;
  cfg.params.beta = 1.0;
  const GalerkinSolver solver(cfg);
  const GalerkinState s = solver.initial_state();
  const FieldSnapshot a = solver.reconstruct(s);
  const FieldSnapshot b = solver.reconstruct(s, solver.grid().nodes());
  for (const char* name : {"u", "w1", "h2", "theta", "psi_re", "psi_im", "v"}) {
    const auto& fa = a.get(name);
    const auto& fb = b.get(name);
    for (std::size_t j = 0; j < fa.size(); ++j) EXPECT_NEAR(fa[j], fb[j], 1e-12) << name;
  }
}
