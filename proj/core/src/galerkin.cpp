#include "swlw/galerkin.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "swlw/errors.hpp"
#include "swlw/interpolation.hpp"

namespace swlw {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const cvec& v) {
  return std::all_of(v.begin(), v.end(), [](const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

// Flat layout: u | w0 | w1 | h0 | h1 | theta | psi_re | psi_im | v.
struct Layout {
  int n, M;
  std::size_t u() const { return 0; }
  std::size_t w(int c) const { return n + c * n; }
  std::size_t h(int c) const { return 3 * n + c * n; }
  std::size_t theta() const { return 5 * n; }
  std::size_t psi_re() const { return 6 * n + 1; }
  std::size_t psi_im() const { return 7 * n + 1; }
  std::size_t v() const { return 8 * n + 1; }
  std::size_t size() const { return 8 * n + 1 + M + 1; }
};

std::vector<double> pack(const GalerkinState& s, const Layout& L) {
  std::vector<double> y(L.size());
  std::copy(s.u.begin(), s.u.end(), y.begin() + L.u());
  for (int c = 0; c < 2; ++c) {
    std::copy(s.w[c].begin(), s.w[c].end(), y.begin() + L.w(c));
    std::copy(s.h[c].begin(), s.h[c].end(), y.begin() + L.h(c));
  }
  std::copy(s.theta.begin(), s.theta.end(), y.begin() + L.theta());
  for (int k = 0; k < L.n; ++k) {
    y[L.psi_re() + k] = s.psi[k].real();
    y[L.psi_im() + k] = s.psi[k].imag();
  }
  std::copy(s.v.begin(), s.v.end(), y.begin() + L.v());
  return y;
}

GalerkinState unpack(const std::vector<double>& y, const Layout& L, double t) {
  GalerkinState s = GalerkinState::zeros(L.n, L.M);
  s.t = t;
  auto at = [&](std::size_t off, std::size_t len) {
    return std::vector<double>(y.begin() + off, y.begin() + off + len);
  };
  s.u = at(L.u(), L.n);
  for (int c = 0; c < 2; ++c) {
    s.w[c] = at(L.w(c), L.n);
    s.h[c] = at(L.h(c), L.n);
  }
  s.theta = at(L.theta(), L.n + 1);
  for (int k = 0; k < L.n; ++k) s.psi[k] = {y[L.psi_re() + k], y[L.psi_im() + k]};
  s.v = at(L.v(), L.M + 1);
  return s;
}

// Diagonal linear part used by the integrating factor.
struct LinearPart {
  Layout L;
  std::vector<double> k2;  // κ_k², k = 0..n
  double du = 0, dw = 0, dh = 0, dth = 0;
  bool rotate = false;

  void apply_exp(std::vector<double>& y, double tau) const {
    for (int k = 1; k <= L.n; ++k) {
      const double eu = std::exp(-du * k2[k] * tau);
      const double ew = std::exp(-dw * k2[k] * tau);
      const double eh = std::exp(-dh * k2[k] * tau);
      y[L.u() + k - 1] *= eu;
      for (int c = 0; c < 2; ++c) {
        y[L.w(c) + k - 1] *= ew;
        y[L.h(c) + k - 1] *= eh;
      }
      y[L.theta() + k] *= std::exp(-dth * k2[k] * tau);
      if (rotate) {
        const double ph = -k2[k] * tau;
        const double c = std::cos(ph), s = std::sin(ph);
        const double re = y[L.psi_re() + k - 1], im = y[L.psi_im() + k - 1];
        y[L.psi_re() + k - 1] = c * re - s * im;
        y[L.psi_im() + k - 1] = s * re + c * im;
      }
    }
  }

  // y ← y − Λ·x
  void subtract_lin(std::vector<double>& y, const std::vector<double>& x) const {
    for (int k = 1; k <= L.n; ++k) {
      y[L.u() + k - 1] += du * k2[k] * x[L.u() + k - 1];
      for (int c = 0; c < 2; ++c) {
        y[L.w(c) + k - 1] += dw * k2[k] * x[L.w(c) + k - 1];
        y[L.h(c) + k - 1] += dh * k2[k] * x[L.h(c) + k - 1];
      }
      y[L.theta() + k] += dth * k2[k] * x[L.theta() + k];
      if (rotate) {
        // Λψ = −iκ²ψ
        y[L.psi_re() + k - 1] -= k2[k] * x[L.psi_im() + k - 1];
        y[L.psi_im() + k - 1] += k2[k] * x[L.psi_re() + k - 1];
      }
    }
  }
};


}  // namespace

const char* integrator_name(Integrator i) { return i == Integrator::RK4 ? "rk4" : "lawson-rk4"; }
const char* h_form_name(HForm h) { return h == HForm::Paper ? "paper" : "conservative"; }

std::vector<std::string> SolverConfig::violations() const {
  auto out = params.violations(true);
  auto add = [&](bool ok, const std::string& m) {
    if (!ok) out.push_back(m);
  };
  add(n >= 1, "solver.n >= 1 required");
  add(dt > 0, "solver.dt > 0 required");
  add(t_end >= 0, "solver.t_end >= 0 required");
  add(monitor_every >= 1, "solver.monitor_every >= 1 required");
  add(snapshot_every >= 0, "solver.snapshot_every >= 0 required");
  add(M() >= n + 1, "collocation_points >= n+1 required");
  add(!dealias || M() >= 2 * n + 1,
      "collocation_points >= 2n+1 required when dealias is on: n=" + std::to_string(n) +
          ", collocation_points=" + std::to_string(M()));
  try {
    initial.validate();
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) out.push_back(v);
  }
  return out;
}

void SolverConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ValidationError(std::move(v));
}

GalerkinState GalerkinState::zeros(int n, int M) {
  GalerkinState s;
  s.n = n;
  s.u.assign(n, 0.0);
  for (int c = 0; c < 2; ++c) {
    s.w[c].assign(n, 0.0);
    s.h[c].assign(n, 0.0);
  }
  s.theta.assign(n + 1, 0.0);
  s.psi.assign(n, {0.0, 0.0});
  s.v.assign(M + 1, 0.0);
  return s;
}

SpectralGrid make_grid(const SolverConfig& cfg) {
  const Profile p = make_profile(cfg.initial, cfg.params.epsilon);
  return SpectralGrid(cfg.M(), p.total_mass());
}

GalerkinSolver::GalerkinSolver(SolverConfig cfg)
    : cfg_((cfg.validate(), std::move(cfg))),
      gas_(cfg_.params, cfg_.law ? *cfg_.law : ThermalLaw::standard(cfg_.params)),
      grid_(make_grid(cfg_)) {}

GalerkinState GalerkinSolver::project(const std::vector<double>& u,
                                      const std::array<std::vector<double>, 2>& w,
                                      const std::array<std::vector<double>, 2>& h,
                                      const std::vector<double>& theta, const cvec& psi,
                                      const std::vector<double>& v, double t) const {
  const int n = cfg_.n;
  GalerkinState s;
  s.n = n;
  s.t = t;
  s.u = grid_.project_sine(u, n);
  for (int c = 0; c < 2; ++c) {
    s.w[c] = grid_.project_sine(w[c], n);
    s.h[c] = cfg_.params.beta > 0 ? grid_.project_sine(h[c], n) : std::vector<double>(n, 0.0);
  }
  s.theta = grid_.project_cosine(theta, n);
  s.psi = grid_.project_sine(psi, n);
  s.v = v;
  if (static_cast<int>(s.v.size()) != grid_.M() + 1) throw ShapeError("v must be nodal");
  return s;
}

GalerkinState GalerkinSolver::initial_state() const {
  const Profile p = make_profile(cfg_.initial, cfg_.params.epsilon);
  const int M = grid_.M();
  const double L = grid_.length();
  std::vector<double> u(M + 1), th(M + 1), v(M + 1);
  std::array<std::vector<double>, 2> w{std::vector<double>(M + 1), std::vector<double>(M + 1)};
  auto h = w;
  cvec psi(M + 1);
  for (int j = 0; j <= M; ++j) {
    const double y = grid_.nodes()[j];
    const double x = p.x_of_mass(y);
    v[j] = 1.0 / p.rho(x);
    u[j] = p.u(x);
    for (int c = 0; c < 2; ++c) {
      w[c][j] = p.w[c](x);
      h[c][j] = p.h[c](x);
    }
    th[j] = p.theta(x);
    psi[j] = p.psi(y / L);
  }
  return project(u, w, h, th, psi, v, 0.0);
}

NodalFields GalerkinSolver::nodal(const GalerkinState& s) const {
  NodalFields f;
  f.u = grid_.synth_sine(s.u);
  f.u_y = grid_.synth_sine_dy(s.u);
  for (int c = 0; c < 2; ++c) {
    f.w[c] = grid_.synth_sine(s.w[c]);
    f.w_y[c] = grid_.synth_sine_dy(s.w[c]);
    f.h[c] = grid_.synth_sine(s.h[c]);
    f.h_y[c] = grid_.synth_sine_dy(s.h[c]);
  }
  f.theta = grid_.synth_cosine(s.theta);
  f.theta_y = grid_.synth_cosine_dy(s.theta);
  f.psi = grid_.synth_sine(s.psi);
  f.psi_y = grid_.synth_sine_dy(s.psi);
  f.v = s.v;
  f.v_y = grid_.synth_cosine_dy(grid_.project_cosine(s.v, grid_.M()));
  f.rho.resize(s.v.size());
  for (std::size_t j = 0; j < s.v.size(); ++j) f.rho[j] = 1.0 / s.v[j];
  return f;
}

void GalerkinSolver::check_state(const GalerkinState& s) const {
  auto finite = [&](bool ok, const char* name) {
    if (!ok) throw DivergenceError(name, s.t);
  };
  finite(all_finite(s.u), "u");
  finite(all_finite(s.w[0]) && all_finite(s.w[1]), "w");
  finite(all_finite(s.h[0]) && all_finite(s.h[1]), "h");
  finite(all_finite(s.theta), "theta");
  finite(all_finite(s.psi), "psi");
  finite(all_finite(s.v), "v");
  const auto& y = grid_.nodes();
  for (std::size_t j = 0; j < s.v.size(); ++j)
    if (!(s.v[j] > kVFloor)) throw PositivityError("v", y[j], s.t, s.v[j]);
  const auto th = grid_.synth_cosine(s.theta);
  for (std::size_t j = 0; j < th.size(); ++j)
    if (!(th[j] > kThetaFloor)) throw PositivityError("theta", y[j], s.t, th[j]);
}

GalerkinState GalerkinSolver::assemble_rhs(const GalerkinState& s) const {
  check_state(s);
  const GasParams& P = cfg_.params;
  const int n = cfg_.n;
  const int M = grid_.M();
  const auto& law = gas_.law();
  const NodalFields f = nodal(s);
  GalerkinState d = GalerkinState::zeros(n, M);
  d.t = s.t;

  std::vector<double> Fu(M + 1), X(M + 1), K(M + 1), dv(M + 1);
  std::array<std::vector<double>, 2> Fw{std::vector<double>(M + 1), std::vector<double>(M + 1)};
  std::vector<double> cth(M + 1);
  cvec nl(M + 1);
  for (int j = 0; j <= M; ++j) {
    const double v = f.v[j], rho = 1.0 / v, th = f.theta[j];
    const double hsq = f.h[0][j] * f.h[0][j] + f.h[1][j] * f.h[1][j];
    const double z = std::norm(f.psi[j]);
    const double pth = law.p_theta(rho);
    const double p = gas_.elastic_pressure(rho) + P.delta * th * pth;
    const double gv = cfg_.coupling.g(v), dgv = cfg_.coupling.dg(v);
    const double hz = cfg_.coupling.h(z), dhz = cfg_.coupling.dh(z);
    Fu[j] = -p - 0.5 * P.beta * hsq + P.alpha * dgv * hz + P.epsilon * f.u_y[j] / v;
    for (int c = 0; c < 2; ++c) Fw[c][j] = P.beta * f.h[c][j] + P.mu * f.w_y[c][j] / v;
    K[j] = law.kappa(th) * f.theta_y[j] / v;
    const double wy2 = f.w_y[0][j] * f.w_y[0][j] + f.w_y[1][j] * f.w_y[1][j];
    const double hy2 = f.h_y[0][j] * f.h_y[0][j] + f.h_y[1][j] * f.h_y[1][j];
    X[j] = -P.delta * th * pth * f.u_y[j] +
           (P.epsilon * f.u_y[j] * f.u_y[j] + P.mu * wy2 + P.nu * hy2) / v;
    cth[j] = law.c_theta(th);
    nl[j] = (z + 2.0 * P.alpha * gv * dhz) * f.psi[j];
    dv[j] = f.u_y[j];
  }
  d.u = grid_.sine_of_derivative(Fu, n);
  for (int c = 0; c < 2; ++c) d.w[c] = grid_.sine_of_derivative(Fw[c], n);

  // (κθ_y/v) vanishes at the walls: differentiate its sine interpolant.
  const auto Ky = grid_.synth_sine_dy(grid_.sine_transform(K));
  for (int j = 0; j <= M; ++j) X[j] = (X[j] + Ky[j]) / cth[j];
  d.theta = grid_.project_cosine(X, n);

  if (P.beta > 0) {
    for (int c = 0; c < 2; ++c) {
      std::vector<double> B(M + 1), G(M + 1);
      for (int j = 0; j <= M; ++j) {
        B[j] = P.beta * (f.w_y[c][j] - f.u_y[j] * f.h[c][j]);
        G[j] = P.nu * f.h_y[c][j] / f.v[j];
      }
      if (cfg_.h_form == HForm::Paper) {
        const auto Gy = grid_.synth_cosine_dy(grid_.project_cosine(G, M));
        for (int j = 0; j <= M; ++j) B[j] = (B[j] + Gy[j]) / (P.beta * f.v[j]);
        d.h[c] = grid_.project_sine(B, n);
      } else {
        auto b = grid_.project_sine(B, n);
        const auto g = grid_.sine_of_derivative(G, n);
        for (int k = 0; k < n; ++k) b[k] += g[k];
        d.h[c] = b;
      }
    }
    if (cfg_.h_form == HForm::Conservative) {
      // Mass matrix (2/L)Σ w βv sin_k sin_l from the cosine transform of v.
      const auto cv = grid_.cosine_transform(s.v);
      auto chat = [&](int m) { return cv[m <= M ? m : 2 * M - m]; };
      Eigen::MatrixXd A(n, n);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          A(k - 1, l - 1) = 0.5 * P.beta * (chat(std::abs(k - l)) - chat(k + l));
      Eigen::LLT<Eigen::MatrixXd> llt(A);
      if (llt.info() != Eigen::Success) throw NumericalError("h mass matrix not positive definite");
      for (int c = 0; c < 2; ++c) {
        Eigen::Map<Eigen::VectorXd> b(d.h[c].data(), n);
        Eigen::VectorXd x = llt.solve(b);
        for (int k = 0; k < n; ++k) d.h[c][k] = x(k);
      }
    }
  }

  const cvec pnl = grid_.project_sine(nl, n);
  for (int k = 1; k <= n; ++k) {
    const double kk = grid_.wavenumber(k);
    d.psi[k - 1] = std::complex<double>(0.0, -1.0) * (kk * kk * s.psi[k - 1] + pnl[k - 1]);
  }
  d.v = dv;
  return d;
}

GalerkinState GalerkinSolver::step(const GalerkinState& s, StepInfo* info) const {
  const Layout L{cfg_.n, grid_.M()};
  const double dt = cfg_.dt;
  LinearPart lin{L, {}, 0, 0, 0, 0, false};
  lin.k2.resize(cfg_.n + 1);
  for (int k = 0; k <= cfg_.n; ++k) lin.k2[k] = grid_.wavenumber(k) * grid_.wavenumber(k);

  const GalerkinState f1 = assemble_rhs(s);
  if (info) info->entropy_rate = entropy_rate(s, f1);

  if (cfg_.integrator == Integrator::LawsonRK4) {
    const GasParams& P = cfg_.params;
    double inv_v = 0.0, inv_v2 = 0.0, th_rate = 0.0;
    const auto th = grid_.synth_cosine(s.theta);
    for (std::size_t j = 0; j < s.v.size(); ++j) {
      inv_v = std::max(inv_v, 1.0 / s.v[j]);
      inv_v2 = std::max(inv_v2, 1.0 / (s.v[j] * s.v[j]));
      th_rate = std::max(th_rate, gas_.law().kappa(th[j]) / (s.v[j] * gas_.law().c_theta(th[j])));
    }
    lin.du = P.epsilon * inv_v;
    lin.dw = P.mu * inv_v;
    lin.dh = P.beta > 0 ? P.nu * inv_v2 / P.beta : 0.0;
    lin.dth = th_rate;
    lin.rotate = true;
  }

  auto nonlinear = [&](const std::vector<double>& y, const GalerkinState* pre, double t) {
    std::vector<double> k = pack(pre ? *pre : assemble_rhs(unpack(y, L, t)), L);
    lin.subtract_lin(k, y);
    return k;
  };

  const std::vector<double> y0 = pack(s, L);
  const std::size_t N = y0.size();
  const double t = s.t;

  auto k1 = nonlinear(y0, &f1, t);
  std::vector<double> y(N);
  for (std::size_t i = 0; i < N; ++i) y[i] = y0[i] + 0.5 * dt * k1[i];
  lin.apply_exp(y, 0.5 * dt);
  auto k2 = nonlinear(y, nullptr, t + 0.5 * dt);

  std::vector<double> ey0 = y0;
  lin.apply_exp(ey0, 0.5 * dt);
  for (std::size_t i = 0; i < N; ++i) y[i] = ey0[i] + 0.5 * dt * k2[i];
  auto k3 = nonlinear(y, nullptr, t + 0.5 * dt);

  std::vector<double> e2y0 = ey0;
  lin.apply_exp(e2y0, 0.5 * dt);
  std::vector<double> ek3 = k3;
  lin.apply_exp(ek3, 0.5 * dt);
  for (std::size_t i = 0; i < N; ++i) y[i] = e2y0[i] + dt * ek3[i];
  auto k4 = nonlinear(y, nullptr, t + dt);

  // y1 = E²y0 + dt/6 (E²k1 + 2E(k2 + k3) + k4)
  std::vector<double> a = k1;
  lin.apply_exp(a, dt);
  std::vector<double> b(N);
  for (std::size_t i = 0; i < N; ++i) b[i] = k2[i] + k3[i];
  lin.apply_exp(b, 0.5 * dt);
  for (std::size_t i = 0; i < N; ++i) y[i] = e2y0[i] + dt / 6.0 * (a[i] + 2.0 * b[i] + k4[i]);

  GalerkinState out = unpack(y, L, t + dt);
  check_state(out);
  return out;
}

double GalerkinSolver::entropy_rate(const GalerkinState& s, const GalerkinState& rhs) const {
  const auto th = grid_.synth_cosine(s.theta);
  const auto tht = grid_.synth_cosine(rhs.theta);
  const auto& w = grid_.weights();
  const auto& law = gas_.law();
  double acc = 0.0;
  for (std::size_t j = 0; j < th.size(); ++j) {
    const double rho = 1.0 / s.v[j];
    acc += w[j] * (cfg_.params.delta * law.p_theta(rho) * rhs.v[j] +
                   law.c_theta(th[j]) / th[j] * tht[j]);
  }
  return acc;
}

double GalerkinSolver::stability_number() const {
  const double k = cfg_.n * kPi / grid_.length();
  return cfg_.params.epsilon * k * k * cfg_.dt;
}

FieldSnapshot GalerkinSolver::reconstruct(const GalerkinState& s) const {
  const NodalFields f = nodal(s);
  FieldSnapshot snap;
  snap.frame = Frame::Lagrangian;
  snap.t = s.t;
  snap.coords = grid_.nodes();
  std::vector<double> pr(f.psi.size()), pi(f.psi.size());
  for (std::size_t j = 0; j < f.psi.size(); ++j) {
    pr[j] = f.psi[j].real();
    pi[j] = f.psi[j].imag();
  }
  snap.set("v", f.v);
  snap.set("rho", f.rho);
  snap.set("u", f.u);
  snap.set("w1", f.w[0]);
  snap.set("w2", f.w[1]);
  snap.set("h1", f.h[0]);
  snap.set("h2", f.h[1]);
  snap.set("theta", f.theta);
  snap.set("psi_re", pr);
  snap.set("psi_im", pi);
  return snap;
}

FieldSnapshot GalerkinSolver::reconstruct(const GalerkinState& s, const std::vector<double>& y) const {
  const double L = grid_.length();
  const auto vc = grid_.project_cosine(s.v, grid_.M());
  std::vector<double> psr(s.psi.size()), psi_i(s.psi.size());
  for (std::size_t k = 0; k < s.psi.size(); ++k) {
    psr[k] = s.psi[k].real();
    psi_i[k] = s.psi[k].imag();
  }
  FieldSnapshot snap;
  snap.frame = Frame::Lagrangian;
  snap.t = s.t;
  snap.coords = y;
  auto eval = [&](auto fn) {
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = fn(y[i]);
    return out;
  };
  auto v = eval([&](double q) { return eval_cosine(vc, L, q); });
  std::vector<double> rho(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rho[i] = 1.0 / v[i];
  snap.set("v", v);
  snap.set("rho", rho);
  snap.set("u", eval([&](double q) { return eval_sine(s.u, L, q); }));
  snap.set("w1", eval([&](double q) { return eval_sine(s.w[0], L, q); }));
  snap.set("w2", eval([&](double q) { return eval_sine(s.w[1], L, q); }));
  snap.set("h1", eval([&](double q) { return eval_sine(s.h[0], L, q); }));
  snap.set("h2", eval([&](double q) { return eval_sine(s.h[1], L, q); }));
  snap.set("theta", eval([&](double q) { return eval_cosine(s.theta, L, q); }));
  snap.set("psi_re", eval([&](double q) { return eval_sine(psr, L, q); }));
  snap.set("psi_im", eval([&](double q) { return eval_sine(psi_i, L, q); }));
  return snap;
}

EulerianFields GalerkinSolver::to_eulerian(const GalerkinState& s, const std::vector<double>& x) const {
  const double L = grid_.length();
  const int M = grid_.M();
  const auto vc = grid_.project_cosine(s.v, M);
  // x(y) = ∫₀^y v: integrate the cosine interpolant term by term.
  auto pos = [&](double y) {
    double acc = vc[0] * y;
    const double th = kPi * y / L;
    for (int k = 1; k <= M; ++k) acc += vc[k] * std::sin(k * th) / grid_.wavenumber(k);
    return acc;
  };
  std::vector<double> xn(M + 1);
  for (int j = 0; j <= M; ++j) xn[j] = pos(grid_.nodes()[j]);
  const Pchip guess(xn, grid_.nodes());

  std::vector<double> psr(s.psi.size()), psi_i(s.psi.size());
  for (std::size_t k = 0; k < s.psi.size(); ++k) {
    psr[k] = s.psi[k].real();
    psi_i[k] = s.psi[k].imag();
  }
  EulerianFields e;
  e.t = s.t;
  e.x = x;
  const std::size_t m = x.size();
  auto alloc = [m](std::vector<double>& v) { v.assign(m, 0.0); };
  for (auto* v : {&e.y, &e.rho, &e.rho_x, &e.v, &e.u, &e.u_x, &e.theta, &e.theta_x}) alloc(*v);
  for (int c = 0; c < 2; ++c)
    for (auto* v : {&e.w[c], &e.w_x[c], &e.h[c], &e.h_x[c]}) alloc(*v);
  e.psi.assign(m, {0, 0});
  e.psi_y.assign(m, {0, 0});
  const double xmax = xn.back();
  for (std::size_t i = 0; i < m; ++i) {
    const double xq = std::clamp(x[i], 0.0, xmax);
    double y = std::clamp(guess(xq), 0.0, L);
    for (int it = 0; it < 4; ++it) {
      const double vv = eval_cosine(vc, L, y);
      y = std::clamp(y - (pos(y) - xq) / vv, 0.0, L);
    }
    const double v = eval_cosine(vc, L, y);
    const double rho = 1.0 / v;
    e.y[i] = y;
    e.v[i] = v;
    e.rho[i] = rho;
    e.rho_x[i] = -rho * rho * rho * eval_cosine_dy(vc, L, y);
    e.u[i] = eval_sine(s.u, L, y);
    e.u_x[i] = rho * eval_sine_dy(s.u, L, y);
    e.theta[i] = eval_cosine(s.theta, L, y);
    e.theta_x[i] = rho * eval_cosine_dy(s.theta, L, y);
    for (int c = 0; c < 2; ++c) {
      e.w[c][i] = eval_sine(s.w[c], L, y);
      e.w_x[c][i] = rho * eval_sine_dy(s.w[c], L, y);
      e.h[c][i] = eval_sine(s.h[c], L, y);
      e.h_x[c][i] = rho * eval_sine_dy(s.h[c], L, y);
    }
    e.psi[i] = {eval_sine(psr, L, y), eval_sine(psi_i, L, y)};
    e.psi_y[i] = {eval_sine_dy(psr, L, y), eval_sine_dy(psi_i, L, y)};
  }
  return e;
}

}  // namespace swlw
