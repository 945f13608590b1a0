#include "swlw/entropy_pairs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

constexpr double kPi = std::numbers::pi;

const QuadratureRule& panel_rule() {
  static const QuadratureRule rule = gauss_legendre(16);
  return rule;
}

using Vals = std::array<double, 3>;

// ∫_{-1}^{1} F(s)(1−s²)^Λ ds for a vector-valued integrand.
template <class F>
Vals integrate_kernel(const EntropyPairSpec& spec, double u, double c, F&& integrand) {
  Vals out{0, 0, 0};
  const Zeta& z = spec.zeta;
  if (z.polynomial() && z.degree + 1 <= spec.rule.exact_degree) {
    for (std::size_t i = 0; i < spec.rule.nodes.size(); ++i) {
      const Vals v = integrand(spec.rule.nodes[i]);
      for (int j = 0; j < 3; ++j) out[j] += spec.rule.weights[i] * v[j];
    }
    return out;
  }
  // s = −cos φ turns the weight into sin^{2Λ+1}φ, smooth up to the ends.
  double s_lo = -1.0, s_hi = 1.0;
  if (z.support) {
    s_lo = std::max(s_lo, (z.support->first - u) / c);
    s_hi = std::min(s_hi, (z.support->second - u) / c);
    if (!(s_hi > s_lo)) return out;
  }
  std::vector<double> cuts = {std::acos(-s_lo), std::acos(-s_hi)};
  for (double b : z.breakpoints) {
    const double sb = (b - u) / c;
    if (sb > s_lo && sb < s_hi) cuts.push_back(std::acos(-sb));
  }
  std::sort(cuts.begin(), cuts.end());
  const double p = 2.0 * spec.Lambda() + 1.0;
  const QuadratureRule& gl = panel_rule();
  auto composite = [&](int panels) {
    Vals acc{0, 0, 0};
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
      const double a = cuts[piece], b = cuts[piece + 1];
      const double hp = (b - a) / panels;
      for (int k = 0; k < panels; ++k) {
        const double mid = a + (k + 0.5) * hp;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
          const double phi = mid + 0.5 * hp * gl.nodes[i];
          const double sp = std::sin(phi);
          const double w = 0.5 * hp * gl.weights[i] * std::pow(sp, p);
          const Vals v = integrand(-std::cos(phi));
          for (int j = 0; j < 3; ++j) acc[j] += w * v[j];
        }
      }
    }
    return acc;
  };
  Vals prev = composite(1);
  for (int panels = 2; panels <= 1024; panels *= 2) {
    const Vals cur = composite(panels);
    double diff = 0, scale = 1.0;
    for (int j = 0; j < 3; ++j) {
      diff = std::max(diff, std::abs(cur[j] - prev[j]));
      scale = std::max(scale, std::abs(cur[j]));
    }
    if (diff <= spec.tolerance * scale) return cur;
    prev = cur;
  }
  throw AccuracyError("entropy-pair quadrature did not converge for zeta '" + z.id + "'");
}

}  // namespace

const std::vector<std::string>& Zeta::builtin_ids() {
  static const std::vector<std::string> ids = {"+1", "-1", "+s", "-s", "s2"};
  return ids;
}

Zeta Zeta::builtin(const std::string& id) {
  Zeta z;
  z.id = id;
  if (id == "+1" || id == "1") {
    z.f = [](double) { return 1.0; };
    z.df = z.d2f = [](double) { return 0.0; };
    z.degree = 0;
  } else if (id == "-1") {
    z.f = [](double) { return -1.0; };
    z.df = z.d2f = [](double) { return 0.0; };
    z.degree = 0;
  } else if (id == "+s" || id == "s") {
    z.f = [](double s) { return s; };
    z.df = [](double) { return 1.0; };
    z.d2f = [](double) { return 0.0; };
    z.degree = 1;
  } else if (id == "-s") {
    z.f = [](double s) { return -s; };
    z.df = [](double) { return -1.0; };
    z.d2f = [](double) { return 0.0; };
    z.degree = 1;
  } else if (id == "s2" || id == "s^2") {
    z.f = [](double s) { return s * s; };
    z.df = [](double s) { return 2.0 * s; };
    z.d2f = [](double) { return 2.0; };
    z.degree = 2;
  } else if (id == "sharp") {
    z.f = [](double s) { return 0.5 * s * std::abs(s); };
    z.df = [](double s) { return std::abs(s); };
    z.d2f = [](double s) { return s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0); };
    z.breakpoints = {0.0};
  } else {
    throw ValidationError("unknown zeta id '" + id + "' (expected +1, -1, +s, -s, s2, sharp)");
  }
  return z;
}

Zeta Zeta::bump(double a, double b) {
  if (!(b > a)) throw ValidationError("bump support must satisfy a < b");
  Zeta z;
  z.id = "bump";
  const double half = 0.5 * (b - a);
  const double c = 1.0 / std::pow(half, 6);
  z.f = [=](double s) {
    if (s <= a || s >= b) return 0.0;
    const double P = (s - a) * (b - s);
    return c * P * P * P;
  };
  z.df = [=](double s) {
    if (s <= a || s >= b) return 0.0;
    const double P = (s - a) * (b - s);
    return 3.0 * c * P * P * (a + b - 2.0 * s);
  };
  z.d2f = [=](double s) {
    if (s <= a || s >= b) return 0.0;
    const double P = (s - a) * (b - s), dP = a + b - 2.0 * s;
    return c * (6.0 * P * dP * dP - 6.0 * P * P);
  };
  z.support = std::make_pair(a, b);
  return z;
}

double EntropyPairSpec::weight_mass() const {
  double s = 0;
  for (double w : rule.weights) s += w;
  return s;
}

EntropyPairSpec EntropyPairSpec::make(Zeta zeta, const GasParams& p, int nodes) {
  if (!(p.gamma > 1)) throw ValidationError("gamma > 1 required");
  if (p.gamma > 3 && !p.allow_gamma_above_3)
    throw UnsupportedError("gamma > 3 requires allow_gamma_above_3 (endpoint-avoiding quadrature)");
  EntropyPairSpec s;
  s.zeta = std::move(zeta);
  s.gamma = p.gamma;
  s.wave_scale = std::sqrt(p.a * p.gamma) / s.vartheta();
  s.nodes = nodes;
  s.rule = gauss_jacobi(nodes, s.Lambda(), s.Lambda());
  EntropyPairSpec e2 = s;
  e2.zeta = Zeta::builtin("s2");
  s.normalization = entropy_pair(1.0, 0.3, e2).eta / mechanical_pair(1.0, 0.3, p).eta;
  return s;
}

EntropyPairSpec EntropyPairSpec::canonical(Zeta zeta, double gamma, int nodes) {
  GasParams p;
  p.gamma = gamma;
  p.allow_gamma_above_3 = true;
  const double th = 0.5 * (gamma - 1.0);
  p.a = th * th / gamma;
  return make(std::move(zeta), p, nodes);
}

double chi(double rho, double u, double s, const EntropyPairSpec& spec) {
  if (rho < 0) throw DomainError("rho must be >= 0");
  if (rho == 0) return 0.0;
  const double c = spec.wave_scale * std::pow(rho, spec.vartheta());
  const double b = c * c - (s - u) * (s - u);
  const double L = spec.Lambda();
  if (b < 0) return 0.0;
  if (b == 0) {
    if (L > 0) return 0.0;
    if (L == 0) return 1.0;
    throw DomainError("kernel is singular at |s-u| = rho^vartheta when gamma > 3");
  }
  return std::pow(b, L);
}

EntropyPair entropy_pair(double rho, double m, const EntropyPairSpec& spec) {
  if (rho < 0) throw DomainError("rho must be >= 0");
  if (rho == 0) return {0.0, 0.0};
  const double u = m / rho;
  const double c = spec.wave_scale * std::pow(rho, spec.vartheta());
  const double th = spec.vartheta();
  const Zeta& z = spec.zeta;
  const Vals v = integrate_kernel(spec, u, c, [&](double s) {
    const double f = z.f(u + c * s);
    return Vals{f, (u + th * c * s) * f, 0.0};
  });
  return {rho * v[0], rho * v[1]};
}

EntropyDerivatives entropy_derivatives(double rho, double m, const EntropyPairSpec& spec) {
  if (rho < 0) throw DomainError("rho must be >= 0");
  if (rho == 0) return {};
  const double u = m / rho;
  const double th = spec.vartheta();
  const double c = spec.wave_scale * std::pow(rho, th);
  const double dc = spec.wave_scale * th * std::pow(rho, th - 1.0);
  const Zeta& z = spec.zeta;
  // Differentiation lowers the polynomial degree, so the rule stays exact.
  const Vals v = integrate_kernel(spec, u, c, [&](double s) {
    const double zz = u + c * s;
    const double d2 = z.d2f(zz);
    return Vals{z.df(zz), d2, d2 * dc * s};
  });
  return {v[0], v[1], v[2]};
}

EntropyPair mechanical_pair(double rho, double m, const GasParams& p) {
  if (rho < 0) throw DomainError("rho must be >= 0");
  if (rho == 0) return {0.0, 0.0};
  const double Pe = p.a / (p.gamma - 1.0) * std::pow(rho, p.gamma - 1.0);
  const double dPe = p.a * std::pow(rho, p.gamma - 2.0);
  return {m * m / (2.0 * rho) + rho * Pe, m * m * m / (2.0 * rho * rho) + m * Pe + rho * m * dPe};
}

bool PairBoundsReport::ok() const {
  if (support_violations || vacuum_violations) return false;
  return analytic_bound < 0 || max_ratio <= analytic_bound * (1.0 + 1e-12);
}

PairBoundsReport pair_bounds_check(const EntropyPairSpec& spec,
                                   const std::vector<std::pair<double, double>>& rho_u) {
  PairBoundsReport r;
  const Zeta& z = spec.zeta;
  if (z.support && spec.Lambda() >= 0) {
    const auto [a, b] = *z.support;
    double fmax = 0;
    for (int i = 0; i <= 2000; ++i) fmax = std::max(fmax, std::abs(z.f(a + (b - a) * i / 2000.0)));
    const double Z = std::max(std::abs(a), std::abs(b));
    const double I0 = spec.weight_mass();
    r.analytic_bound = fmax * (I0 * (1.0 + Z) + (b - a));
  }
  for (const auto& [rho, u] : rho_u) {
    ++r.samples;
    const EntropyPair e = entropy_pair(rho, rho * u, spec);
    const double mag = std::abs(e.eta) + std::abs(e.q);
    if (rho == 0) {
      if (mag != 0) ++r.vacuum_violations;
      continue;
    }
    r.max_ratio = std::max(r.max_ratio, mag / rho);
    if (z.support) {
      const double c = spec.wave_scale * std::pow(rho, spec.vartheta());
      const bool inside = u + c >= z.support->first && u - c <= z.support->second;
      if (!inside && mag != 0) ++r.support_violations;
    }
  }
  return r;
}

namespace {

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
  std::vector<double> w(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = x[i + 1] - x[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

std::vector<double> d4(const std::vector<double>& f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 5) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = i ? i - 1 : i, b = i + 1 < n ? i + 1 : i;
      d[i] = b > a ? (f[b] - f[a]) / ((b - a) * dx) : 0.0;
    }
    return d;
  }
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (f[i - 2] - 8 * f[i - 1] + 8 * f[i + 1] - f[i + 2]) / (12 * dx);
  auto fwd = [&](std::size_t i) {
    return (-25 * f[i] + 48 * f[i + 1] - 36 * f[i + 2] + 16 * f[i + 3] - 3 * f[i + 4]) / (12 * dx);
  };
  auto bwd = [&](std::size_t i) {
    return (25 * f[i] - 48 * f[i - 1] + 36 * f[i - 2] - 16 * f[i - 3] + 3 * f[i - 4]) / (12 * dx);
  };
  d[0] = fwd(0);
  d[1] = (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) / (12 * dx);
  d[n - 1] = bwd(n - 1);
  d[n - 2] = (3 * f[n - 1] + 10 * f[n - 2] - 18 * f[n - 3] + 6 * f[n - 4] - f[n - 5]) / (12 * dx);
  return d;
}

}  // namespace

EulerianFields eulerian_from_snapshot(const FieldSnapshot& s) {
  if (s.frame != Frame::Eulerian) throw ValidationError("expected an Eulerian snapshot");
  const auto& x = s.coords;
  if (x.size() < 2) throw ShapeError("snapshot needs >= 2 points");
  const double dx = (x.back() - x.front()) / (x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - (x.front() + i * dx)) > 1e-9 * std::max(1.0, std::abs(x.back())))
      throw ValidationError("snapshot grid must be uniform");
  EulerianFields e;
  e.t = s.t;
  e.x = x;
  auto opt = [&](const char* k) {
    return s.has(k) ? s.get(k) : std::vector<double>(x.size(), 0.0);
  };
  e.rho = s.get("rho");
  e.u = s.get("u");
  e.theta = opt("theta");
  e.w[0] = opt("w1");
  e.w[1] = opt("w2");
  e.h[0] = opt("h1");
  e.h[1] = opt("h2");
  e.rho_x = d4(e.rho, dx);
  e.u_x = d4(e.u, dx);
  e.theta_x = d4(e.theta, dx);
  for (int c = 0; c < 2; ++c) {
    e.w_x[c] = d4(e.w[c], dx);
    e.h_x[c] = d4(e.h[c], dx);
  }
  e.v.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) e.v[i] = 1.0 / e.rho[i];
  const auto pr = opt("psi_re"), pi = opt("psi_im");
  const auto prx = d4(pr, dx), pix = d4(pi, dx);
  e.psi.resize(x.size());
  e.psi_y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    e.psi[i] = {pr[i], pi[i]};
    e.psi_y[i] = std::complex<double>(prx[i], pix[i]) * e.v[i];  // ψ_y = ψ_x / ρ
  }
  e.y = opt("y");
  return e;
}

DissipationBalance dissipation_balance_residual(const std::vector<EulerianFields>& traj,
                                                const EntropyPairSpec& spec,
                                                const TestFunction& phi, const GasParams& p,
                                                const CouplingFns& cp) {
  DissipationBalance out;
  if (traj.empty()) return out;
  const auto wx = trapezoid_weights(traj.front().x);
  std::vector<DissipationBalance> rate(traj.size());
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const EulerianFields& e = traj[n];
    if (e.x.size() != wx.size()) throw ShapeError("trajectory grids differ");
    DissipationBalance& r = rate[n];
    for (std::size_t i = 0; i < e.x.size(); ++i) {
      const double x = e.x[i], t = e.t, rho = e.rho[i], u = e.u[i];
      const double ph = phi.phi(x, t), ph_t = phi.phi_t(x, t), ph_x = phi.phi_x(x, t);
      if (ph == 0 && ph_t == 0 && ph_x == 0) continue;
      const EntropyPair ep = entropy_pair(rho, rho * u, spec);
      const EntropyDerivatives d = entropy_derivatives(rho, rho * u, spec);
      const double w = wx[i];
      r.weak += w * (ep.eta * ph_t + ep.q * ph_x);
      const double ux = e.u_x[i], rx = e.rho_x[i];
      r.eps += w * p.epsilon * (-d.eta_m * ux * ph_x - d.eta_mu * ux * ux * ph - d.eta_mrho * rx * ux * ph);
      const double tp = p.delta * e.theta[i] * rho;  // δθp_θ(ρ) with p_θ(ρ) = ρ
      r.delta += w * (tp * d.eta_m * ph_x + tp * (d.eta_mu * ux + d.eta_mrho * rx) * ph);
      const double hhx = e.h[0][i] * e.h_x[0][i] + e.h[1][i] * e.h_x[1][i];
      r.beta += w * (-p.beta * hhx * d.eta_m * ph);
      const double v = 1.0 / rho, vx = -rx / (rho * rho);
      const double z = std::norm(e.psi[i]);
      const double zx = 2.0 * rho * (std::conj(e.psi[i]) * e.psi_y[i]).real();
      const double gx = cp.d2g(v) * vx * cp.h(z) + cp.dg(v) * cp.dh(z) * zx;
      r.alpha += w * p.alpha * gx * d.eta_m * ph;
    }
  }
  for (std::size_t n = 0; n + 1 < traj.size(); ++n) {
    const double dt = traj[n + 1].t - traj[n].t;
    out.weak += 0.5 * dt * (rate[n].weak + rate[n + 1].weak);
    out.eps += 0.5 * dt * (rate[n].eps + rate[n + 1].eps);
    out.delta += 0.5 * dt * (rate[n].delta + rate[n + 1].delta);
    out.beta += 0.5 * dt * (rate[n].beta + rate[n + 1].beta);
    out.alpha += 0.5 * dt * (rate[n].alpha + rate[n + 1].alpha);
  }
  const EulerianFields& e0 = traj.front();
  for (std::size_t i = 0; i < e0.x.size(); ++i) {
    const double ph = phi.phi(e0.x[i], e0.t);
    if (ph == 0) continue;
    out.weak += wx[i] * entropy_pair(e0.rho[i], e0.rho[i] * e0.u[i], spec).eta * ph;
  }
  out.residual = out.weak + out.eps + out.delta + out.beta + out.alpha;
  return out;
}

DissipationBalance dissipation_balance_residual(const std::vector<FieldSnapshot>& traj,
                                                const EntropyPairSpec& spec,
                                                const TestFunction& phi, const GasParams& p,
                                                const CouplingFns& coupling) {
  std::vector<EulerianFields> e;
  e.reserve(traj.size());
  for (const auto& s : traj) e.push_back(eulerian_from_snapshot(s));
  return dissipation_balance_residual(e, spec, phi, p, coupling);
}

}  // namespace swlw
