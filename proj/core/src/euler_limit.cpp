#include "swlw/euler_limit.hpp"

#include <algorithm>
#include <cmath>

#include "swlw/errors.hpp"
#include "swlw/tridiag.hpp"

namespace swlw {

namespace {

constexpr double kTiny = 1e-14;
constexpr double kVacuum = 1e-10;

double minmod(double a, double b) {
  if (a * b <= 0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

double velocity(double rho, double m) { return rho > kTiny ? m / rho : 0.0; }

// Reconstructed states and wave-speed bounds at one face.
struct Face {
  double rl, ml, rr, mr;
  double sl, sr, lambda;
};

std::vector<Face> reconstruct(const EulerState& s, const EulerParams& p) {
  const int n = s.cells();
  // Two mirrored ghost cells per side; momentum changes sign.
  std::vector<double> r(n + 4), m(n + 4);
  for (int i = 0; i < n; ++i) {
    r[i + 2] = s.rho[i];
    m[i + 2] = s.m[i];
  }
  for (int g = 0; g < 2; ++g) {
    r[1 - g] = s.rho[g];
    m[1 - g] = -s.m[g];
    r[n + 2 + g] = s.rho[n - 1 - g];
    m[n + 2 + g] = -s.m[n - 1 - g];
  }
  std::vector<double> sr(n + 4, 0.0), sm(n + 4, 0.0);
  for (int i = 1; i < n + 3; ++i) {
    sr[i] = minmod(r[i] - r[i - 1], r[i + 1] - r[i]);
    sm[i] = minmod(m[i] - m[i - 1], m[i + 1] - m[i]);
  }
  std::vector<Face> f(n + 1);
  for (int j = 0; j <= n; ++j) {
    const int L = j + 1, R = j + 2;
    Face& F = f[j];
    F.rl = r[L] + 0.5 * sr[L];
    F.ml = m[L] + 0.5 * sm[L];
    F.rr = r[R] - 0.5 * sr[R];
    F.mr = m[R] - 0.5 * sm[R];
    const double ul = velocity(F.rl, F.ml), ur = velocity(F.rr, F.mr);
    const double cl = sound_speed(F.rl, p), cr = sound_speed(F.rr, p);
    F.sl = std::min(ul - cl, ur - cr);
    F.sr = std::max(ul + cl, ur + cr);
    F.lambda = std::max(std::abs(ul) + cl, std::abs(ur) + cr);
  }
  return f;
}

double combine(const Face& F, EulerFlux kind, double ul, double ur, double fl, double fr) {
  if (kind == EulerFlux::LLF) return 0.5 * (fl + fr) - 0.5 * F.lambda * (ur - ul);
  if (F.sl >= 0) return fl;
  if (F.sr <= 0) return fr;
  return (F.sr * fl - F.sl * fr + F.sl * F.sr * (ur - ul)) / (F.sr - F.sl);
}

struct Fluxes {
  std::vector<double> mass, mom;
};

Fluxes fluxes(const std::vector<Face>& faces, const EulerParams& p) {
  Fluxes out;
  out.mass.resize(faces.size());
  out.mom.resize(faces.size());
  auto pr = [&](double rho) { return p.a * std::pow(rho, p.gamma); };
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const Face& F = faces[j];
    const double ul = velocity(F.rl, F.ml), ur = velocity(F.rr, F.mr);
    out.mass[j] = combine(F, p.flux, F.rl, F.rr, F.ml, F.mr);
    out.mom[j] = combine(F, p.flux, F.ml, F.mr, F.ml * ul + pr(F.rl), F.mr * ur + pr(F.rr));
  }
  return out;
}

void check_density(EulerState& s) {
  const double dx = s.dx();
  for (int i = 0; i < s.cells(); ++i) {
    if (!std::isfinite(s.rho[i]) || !std::isfinite(s.m[i])) throw DivergenceError("rho", s.t);
    if (s.rho[i] < 0) {
      if (s.rho[i] > -kTiny) {
        s.rho[i] = 0.0;
      } else {
        throw PositivityError("rho", (i + 0.5) * dx, s.t, s.rho[i]);
      }
    }
    if (s.rho[i] == 0.0) s.m[i] = 0.0;
  }
}

EulerState forward_euler(const EulerState& s, const Fluxes& f, double dt) {
  EulerState out = s;
  const double k = dt / s.dx();
  for (int i = 0; i < s.cells(); ++i) {
    out.rho[i] = s.rho[i] - k * (f.mass[i + 1] - f.mass[i]);
    out.m[i] = s.m[i] - k * (f.mom[i + 1] - f.mom[i]);
  }
  out.t = s.t + dt;
  return out;
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
  std::vector<double> w(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = x[i + 1] - x[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

}  // namespace

const char* euler_flux_name(EulerFlux f) { return f == EulerFlux::LLF ? "llf" : "hll"; }

EulerFlux parse_euler_flux(const std::string& s) {
  if (s == "llf") return EulerFlux::LLF;
  if (s == "hll") return EulerFlux::HLL;
  throw ValidationError("unknown flux '" + s + "' (expected llf or hll)");
}

EulerParams EulerParams::from(const GasParams& g) {
  EulerParams p;
  p.a = g.a;
  p.gamma = g.gamma;
  return p;
}

std::vector<std::string> EulerParams::violations() const {
  std::vector<std::string> v;
  if (!(a > 0)) v.push_back("a > 0 required");
  if (!(gamma > 1)) v.push_back("gamma > 1 required");
  if (!(cfl > 0 && cfl <= 0.45)) v.push_back("cfl must lie in (0, 0.45]");
  return v;
}

void EulerParams::validate() const {
  auto v = violations();
  if (!v.empty()) throw ValidationError(std::move(v));
}

std::vector<double> EulerState::centers() const {
  std::vector<double> x(cells());
  for (int i = 0; i < cells(); ++i) x[i] = (i + 0.5) * dx();
  return x;
}

double sound_speed(double rho, const EulerParams& p) {
  return rho > 0 ? std::sqrt(p.a * p.gamma * std::pow(rho, p.gamma - 1.0)) : 0.0;
}

double max_signal_speed(const EulerState& s, const EulerParams& p) {
  double v = 0;
  for (int i = 0; i < s.cells(); ++i)
    v = std::max(v, std::abs(velocity(s.rho[i], s.m[i])) + sound_speed(s.rho[i], p));
  return v;
}

double stable_dt(const EulerState& s, const EulerParams& p) {
  const double c = max_signal_speed(s, p);
  if (!(c > 0)) throw StepSizeError("no signal speed: state is vacuum everywhere");
  return p.cfl * s.dx() / c;
}

EulerState euler_step(const EulerState& s, double dt, const EulerParams& p, EulerStepInfo* info) {
  if (s.rho.size() != s.m.size() || s.cells() < 2) throw ShapeError("EulerState needs matching rho, m with >= 2 cells");
  if (!(dt > 0)) throw StepSizeError("dt must be positive");
  const double number = dt * max_signal_speed(s, p) / s.dx();
  if (number > 0.45 * (1.0 + 1e-12))
    throw StepSizeError("CFL number " + std::to_string(number) + " exceeds 0.45");
  const Fluxes f0 = fluxes(reconstruct(s, p), p);
  EulerState s1 = forward_euler(s, f0, dt);
  check_density(s1);
  const Fluxes f1 = fluxes(reconstruct(s1, p), p);
  EulerState out = s;
  const double k = dt / s.dx();
  const int n = s.cells();
  std::vector<double> fm(n + 1), fp(n + 1);
  for (int j = 0; j <= n; ++j) {
    fm[j] = 0.5 * (f0.mass[j] + f1.mass[j]);
    fp[j] = 0.5 * (f0.mom[j] + f1.mom[j]);
  }
  for (int i = 0; i < n; ++i) {
    out.rho[i] = s.rho[i] - k * (fm[i + 1] - fm[i]);
    out.m[i] = s.m[i] - k * (fp[i + 1] - fp[i]);
  }
  out.t = s.t + dt;
  check_density(out);
  if (info) {
    info->mass_flux.resize(n + 1);
    info->momentum_flux.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      info->mass_flux[j] = dt * fm[j];
      info->momentum_flux[j] = dt * fp[j];
    }
  }
  return out;
}

EulerTrajectory euler_run(EulerState s0, double t_end, const EulerParams& p) {
  p.validate();
  EulerTrajectory tr;
  tr.params = p;
  tr.states.push_back(s0);
  EulerState s = std::move(s0);
  while (s.t < t_end * (1.0 - 1e-14)) {
    const double dt = std::min(stable_dt(s, p), t_end - s.t);
    EulerStepInfo info;
    s = euler_step(s, dt, p, &info);
    if (t_end - s.t < 1e-14 * t_end) s.t = t_end;
    tr.states.push_back(s);
    tr.steps.push_back(std::move(info));
  }
  return tr;
}

double mechanical_energy(const EulerState& s, const EulerParams& p) {
  GasParams g;
  g.a = p.a;
  g.gamma = p.gamma;
  double e = 0;
  for (int i = 0; i < s.cells(); ++i) e += mechanical_pair(s.rho[i], s.m[i], g).eta;
  return e * s.dx();
}

EulerState dam_break(int cells, double rho_left, double rho_right, double width) {
  auto rho = [=](double x) {
    if (width <= 0) return x < 0.5 ? rho_left : rho_right;
    return rho_right + (rho_left - rho_right) * 0.5 * (1.0 - std::tanh((x - 0.5) / width));
  };
  return EulerState::from_profile(cells, rho, [](double) { return 0.0; });
}

double entropy_inequality_residual(const EulerTrajectory& traj, const std::string& zeta_id,
                                   const TestFunction& phi) {
  const auto& ids = Zeta::builtin_ids();
  if (std::find(ids.begin(), ids.end(), zeta_id) == ids.end())
    throw ValidationError("zeta must be one of +1, -1, +s, -s, s2");
  GasParams g;
  g.a = traj.params.a;
  g.gamma = traj.params.gamma;
  return entropy_inequality_residual(traj, EntropyPairSpec::make(Zeta::builtin(zeta_id), g),
                                     phi);
}

double entropy_inequality_residual(const EulerTrajectory& traj, const EntropyPairSpec& spec,
                                   const TestFunction& phi) {
  if (traj.states.empty()) return 0.0;
  const EulerParams& p = traj.params;
  const int n = traj.states.front().cells();
  const double dx = traj.states.front().dx();
  const std::vector<double> xc = traj.states.front().centers();
  std::vector<double> eta(n), eta_next(n);
  auto cell_eta = [&](const EulerState& s, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) out[i] = entropy_pair(s.rho[i], s.m[i], spec).eta;
  };
  auto face_flux = [&](const EulerState& s) {
    const auto faces = reconstruct(s, p);
    std::vector<double> G(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
      const Face& F = faces[j];
      const EntropyPair L = entropy_pair(F.rl, F.ml, spec), R = entropy_pair(F.rr, F.mr, spec);
      G[j] = combine(F, p.flux, L.eta, R.eta, L.q, R.q);
    }
    return G;
  };
  cell_eta(traj.states.front(), eta);
  double residual = 0;
  for (std::size_t k = 0; k + 1 < traj.states.size(); ++k) {
    const EulerState& s0 = traj.states[k];
    const double dt = traj.dt(k);
    const EulerState s1 = forward_euler(s0, fluxes(reconstruct(s0, p), p), dt);
    const auto G0 = face_flux(s0), G1 = face_flux(s1);
    cell_eta(traj.states[k + 1], eta_next);
    const double tm = s0.t + 0.5 * dt;
    for (int i = 0; i < n; ++i) {
      const double ph = phi.phi(xc[i], tm);
      if (ph == 0) continue;
      // Cell entropy production of the step; nonpositive for an entropy-stable update.
      const double D = (eta_next[i] - eta[i]) * dx +
                       dt * 0.5 * ((G0[i + 1] + G1[i + 1]) - (G0[i] + G1[i]));
      residual -= D * ph;
    }
    eta.swap(eta_next);
  }
  return residual;
}

NlsState nls_step(const NlsState& s, double dt, const NlsParams& p) {
  const int N = s.intervals();
  if (N < 2) throw ShapeError("NLS grid needs >= 2 intervals");
  using C = std::complex<double>;
  std::vector<C> psi = s.psi;
  psi.front() = psi.back() = 0.0;
  auto rotate = [&](double tau) {
    if (!p.cubic) return;
    for (auto& z : psi) z *= std::polar(1.0, -std::norm(z) * tau);
  };
  rotate(0.5 * dt);
  const double r = dt / (s.dy() * s.dy());
  const C I(0.0, 1.0);
  const int m = N - 1;
  std::vector<C> a(m, -0.5 * I * r), b(m, 1.0 + I * r), c(m, -0.5 * I * r), d(m);
  a[0] = 0.0;
  c[m - 1] = 0.0;
  for (int j = 1; j <= m; ++j)
    d[j - 1] = (1.0 - I * r) * psi[j] + 0.5 * I * r * (psi[j + 1] + psi[j - 1]);
  solve_tridiagonal(a, b, c, d);
  for (int j = 1; j <= m; ++j) psi[j] = d[j - 1];
  rotate(0.5 * dt);
  for (const auto& z : psi)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DivergenceError("psi", s.t + dt);
  NlsState out = s;
  out.psi = std::move(psi);
  out.t = s.t + dt;
  return out;
}

double nls_mass(const NlsState& s) {
  double m = 0;
  for (const auto& z : s.psi) m += std::norm(z);
  m -= 0.5 * (std::norm(s.psi.front()) + std::norm(s.psi.back()));
  return m * s.dy();
}

double nls_energy(const NlsState& s) {
  const double dy = s.dy();
  double e = 0;
  for (int j = 0; j < s.intervals(); ++j) e += 0.5 * std::norm(s.psi[j + 1] - s.psi[j]) / dy;
  for (int j = 0; j <= s.intervals(); ++j) {
    const double wq = (j == 0 || j == s.intervals()) ? 0.5 * dy : dy;
    e += 0.25 * std::norm(s.psi[j]) * std::norm(s.psi[j]) * wq;
  }
  return e;
}

std::vector<double> transverse_step(const std::vector<double>& w, const std::vector<double>& rho_old,
                                    const std::vector<double>& rho_new,
                                    const std::vector<double>& F, double dx, double dt,
                                    double mu) {
  const std::size_t n = w.size();
  if (rho_old.size() != n || rho_new.size() != n || F.size() != n + 1)
    throw ShapeError("transverse_step: inconsistent sizes");
  // Upwind transport of ρw; F holds dt-integrated face mass fluxes.
  std::vector<double> G(n + 1, 0.0);
  for (std::size_t j = 1; j < n; ++j) G[j] = F[j] * (F[j] >= 0 ? w[j - 1] : w[j]);
  std::vector<double> ws(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rw = rho_old[i] * w[i] - (G[i + 1] - G[i]) / dx;
    if (rho_new[i] >= kVacuum) {
      ws[i] = rw / rho_new[i];
    } else if (i > 0 && F[i] > 0) {
      ws[i] = w[i - 1];
    } else if (i + 1 < n && F[i + 1] < 0) {
      ws[i] = w[i + 1];
    } else {
      ws[i] = w[i];
    }
  }
  if (mu == 0) return ws;
  // ρ*(w − w*) = dt μ w_xx with odd ghosts, so w = 0 on the walls.
  const double k = dt * mu / (dx * dx);
  std::vector<double> a(n, -k), b(n), c(n, -k), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = rho_new[i] + 2.0 * k;
    d[i] = rho_new[i] * ws[i];
  }
  a[0] = 0.0;
  c[n - 1] = 0.0;
  b[0] += k;
  b[n - 1] += k;
  solve_tridiagonal(a, b, c, d);
  return d;
}

std::vector<double> transverse_step(const std::vector<double>& w, const std::vector<double>& rho,
                                    const std::vector<double>& m, double dx, double dt,
                                    double mu) {
  const std::size_t n = w.size();
  if (rho.size() != n || m.size() != n) throw ShapeError("transverse_step: inconsistent sizes");
  std::vector<double> F(n + 1, 0.0), rho_new(n);
  for (std::size_t j = 1; j < n; ++j) F[j] = dt * 0.5 * (m[j - 1] + m[j]);
  for (std::size_t i = 0; i < n; ++i) rho_new[i] = rho[i] - (F[i + 1] - F[i]) / dx;
  return transverse_step(w, rho, rho_new, F, dx, dt, mu);
}

ThermalResidual thermal_inequality_residual(const std::vector<EulerianFields>& traj,
                                            const TestFunction& phi, const Gas& gas) {
  ThermalResidual out;
  if (traj.empty()) return out;
  const auto& x = traj.front().x;
  validate_thermal_test(phi, x.front(), x.back());
  const auto wx = trapezoid_weights(x);
  const double mu = gas.params().mu;
  std::vector<double> rate(traj.size(), 0.0), vac(traj.size(), 0.0);
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const EulerianFields& e = traj[n];
    if (e.x.size() != x.size()) throw ShapeError("trajectory grids differ");
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double Q = gas.Q(e.theta[i]);
      const double K = gas.kappa_primitive(e.theta[i]);
      const double wx2 = e.w_x[0][i] * e.w_x[0][i] + e.w_x[1][i] * e.w_x[1][i];
      rate[n] += wx[i] * (e.rho[i] * Q * phi.phi_t(x[i], e.t) +
                          e.rho[i] * e.u[i] * Q * phi.phi_x(x[i], e.t) +
                          K * phi.phi_xx(x[i], e.t) + mu * wx2 * phi.phi(x[i], e.t));
      if (e.rho[i] < kVacuum) vac[n] += wx[i];
    }
  }
  double T = 0;
  for (std::size_t n = 0; n + 1 < traj.size(); ++n) {
    const double dt = traj[n + 1].t - traj[n].t;
    out.value += 0.5 * dt * (rate[n] + rate[n + 1]);
    out.vacuum_measure += 0.5 * dt * (vac[n] + vac[n + 1]);
    T += dt;
  }
  out.vacuum_measure = T > 0 ? out.vacuum_measure / T : vac.front();
  const EulerianFields& e0 = traj.front();
  for (std::size_t i = 0; i < x.size(); ++i)
    out.value += wx[i] * e0.rho[i] * gas.Q(e0.theta[i]) * phi.phi(x[i], e0.t);
  return out;
}

LimitResult limit_run(const LimitConfig& cfg, const EulerState& euler0,
                      const std::array<std::vector<double>, 2>& w0, const NlsState& nls0) {
  cfg.euler.validate();
  if (cfg.samples < 1) throw ValidationError("limit run needs >= 1 sample interval");
  LimitResult res;
  res.x = euler0.centers();
  res.y.resize(nls0.psi.size());
  for (std::size_t j = 0; j < res.y.size(); ++j) res.y[j] = j * nls0.dy();
  EulerState e = euler0;
  auto w = w0;
  NlsState z = nls0;
  auto record = [&]() {
    LimitSample s;
    s.t = e.t;
    s.rho = e.rho;
    s.m = e.m;
    s.w = w;
    s.psi = z.psi;
    res.samples.push_back(std::move(s));
  };
  record();
  for (int k = 1; k <= cfg.samples; ++k) {
    const double t_next = cfg.t_end * k / cfg.samples;
    while (e.t < t_next - 1e-14 * cfg.t_end) {
      const double dt = std::min(stable_dt(e, cfg.euler), t_next - e.t);
      EulerStepInfo info;
      EulerState next = euler_step(e, dt, cfg.euler, &info);
      for (int c = 0; c < 2; ++c)
        w[c] = transverse_step(w[c], e.rho, next.rho, info.mass_flux, e.dx(), dt, cfg.mu);
      e = std::move(next);
    }
    e.t = t_next;
    const double span = t_next - z.t;
    const int sub = std::max(1, static_cast<int>(std::ceil(span / cfg.nls_dt - 1e-9)));
    for (int i = 0; i < sub; ++i) z = nls_step(z, span / sub);
    z.t = t_next;
    record();
  }
  return res;
}

}  // namespace swlw
