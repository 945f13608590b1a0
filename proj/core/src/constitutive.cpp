#include "swlw/constitutive.hpp"

#include <cmath>
#include <sstream>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void require_nonneg(double x, const char* what) {
  if (!(x >= 0.0)) throw DomainError(std::string(what) + " must be >= 0, got " + num(x));
}

void require_pos(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + " must be > 0, got " + num(x));
}

}  // namespace

std::vector<std::string> GasParams::violations(bool viscous) const {
  std::vector<std::string> out;
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
  };
  check(a > 0, "a > 0 required: a=" + num(a));
  check(gamma > 1, "gamma > 1 required: gamma=" + num(gamma));
  check(gamma <= 3 || allow_gamma_above_3,
        "gamma <= 3 required unless allow_gamma_above_3: gamma=" + num(gamma));
  check(delta >= 0, "delta >= 0 required: delta=" + num(delta));
  check(beta >= 0, "beta >= 0 required: beta=" + num(beta));
  check(alpha >= 0, "alpha >= 0 required: alpha=" + num(alpha));
  check(r >= 0 && r <= 1, "r in [0,1] required: r=" + num(r));
  check(q >= 2 + 2 * r, "q >= 2+2r violated: q=" + num(q) + ", r=" + num(r));
  check(e1 > 0, "e1 > 0 required: e1=" + num(e1));
  check(e2 >= e1, "e2 >= e1 required: e1=" + num(e1) + ", e2=" + num(e2));
  check(k1 > 0, "k1 > 0 required: k1=" + num(k1));
  check(k2 >= k1, "k2 >= k1 required: k1=" + num(k1) + ", k2=" + num(k2));
  check(p0 >= 0, "p0 >= 0 required: p0=" + num(p0));
  check(Gamma <= gamma / 2, "Gamma <= gamma/2 violated: Gamma=" + num(Gamma) +
                                ", gamma=" + num(gamma));
  if (viscous) {
    check(epsilon > 0, "epsilon > 0 required for viscous runs: epsilon=" + num(epsilon));
    check(mu > 0, "mu > 0 required for viscous runs: mu=" + num(mu));
    check(nu > 0, "nu > 0 required for viscous runs: nu=" + num(nu));
  }
  return out;
}

void GasParams::validate(bool viscous) const {
  auto v = violations(viscous);
  if (!v.empty()) throw ValidationError(std::move(v));
}

ThermalLaw ThermalLaw::standard(const GasParams& p) {
  ThermalLaw law;
  const double e1 = p.e1, r = p.r, k1 = p.k1, q = p.q;
  law.p_theta = [](double rho) { return rho; };
  law.s_rho = [](double rho) { return std::log(rho); };
  law.c_theta = [e1, r](double th) { return e1 * (1.0 + std::pow(th, r)); };
  law.Q = [e1, r](double th) { return e1 * (th + std::pow(th, r + 1.0) / (r + 1.0)); };
  law.s_theta = [e1, r](double th) {
    if (r == 0.0) return 2.0 * e1 * std::log(th);
    return e1 * (std::log(th) + (std::pow(th, r) - 1.0) / r);
  };
  law.kappa = [k1, q](double th) { return k1 * (1.0 + std::pow(th, q)); };
  law.kappa_primitive = [k1, q](double th) {
    return k1 * (th + std::pow(th, q + 1.0) / (q + 1.0));
  };
  return law;
}

Gas::Gas(GasParams p) : p_(p), law_(ThermalLaw::standard(p)) {}
Gas::Gas(GasParams p, ThermalLaw law) : p_(p), law_(std::move(law)) {}

double Gas::elastic_pressure(double rho) const { return p_.a * std::pow(rho, p_.gamma); }

double Gas::pressure(double rho, double theta) const {
  require_nonneg(rho, "rho");
  require_nonneg(theta, "theta");
  return elastic_pressure(rho) + p_.delta * theta * law_.p_theta(rho);
}

double Gas::elastic_potential(double rho) const {
  return p_.a / (p_.gamma - 1.0) * std::pow(rho, p_.gamma - 1.0);
}

double Gas::elastic_potential_d(double rho) const {
  return p_.a * std::pow(rho, p_.gamma - 2.0);
}

double Gas::internal_energy(double rho, double theta) const {
  require_pos(rho, "rho");
  require_nonneg(theta, "theta");
  return elastic_potential(rho) + law_.Q(theta);
}

double Gas::entropy(double rho, double theta) const {
  require_pos(rho, "rho");
  require_pos(theta, "theta");
  return law_.s_theta(theta) - p_.delta * law_.s_rho(rho);
}

double Gas::heat_conductivity(double theta) const {
  require_nonneg(theta, "theta");
  return law_.kappa(theta);
}

double Gas::kappa_primitive(double theta) const {
  require_nonneg(theta, "theta");
  return law_.kappa_primitive(theta);
}

double Gas::specific_heat(double theta) const { return law_.c_theta(theta); }
double Gas::Q(double theta) const { return law_.Q(theta); }
double Gas::p_theta(double rho) const { return law_.p_theta(rho); }

double Gas::sound_speed(double rho) const {
  return std::sqrt(p_.a * p_.gamma * std::pow(rho, p_.gamma - 1.0));
}

double Gas::maxwell_residual(double rho, double theta, double step) const {
  require_pos(rho, "rho");
  require_nonneg(theta, "theta");
  if (rho - step <= 0.0) throw DomainError("rho too close to 0 for the difference step");
  const double e_rho = (internal_energy(rho + step, theta) - internal_energy(rho - step, theta)) /
                       (2.0 * step);
  const double dp_dtheta = p_.delta * law_.p_theta(rho);
  const double rhs = (pressure(rho, theta) - theta * dp_dtheta) / (rho * rho);
  return e_rho - rhs;
}

double pressure(double rho, double theta, const GasParams& p) {
  return Gas(p).pressure(rho, theta);
}
double internal_energy(double rho, double theta, const GasParams& p) {
  return Gas(p).internal_energy(rho, theta);
}
double entropy(double rho, double theta, const GasParams& p) {
  return Gas(p).entropy(rho, theta);
}
double heat_conductivity(double theta, const GasParams& p) {
  return Gas(p).heat_conductivity(theta);
}
double kappa_primitive(double theta, const GasParams& p) {
  return Gas(p).kappa_primitive(theta);
}
double maxwell_residual(double rho, double theta, const GasParams& p) {
  return Gas(p).maxwell_residual(rho, theta);
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep_d(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double s = t * (1.0 - t);
  return 30.0 * s * s;
}

double smoothstep_d2(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

CouplingFns CouplingFns::standard() {
  CouplingFns f;
  const double lo = 0.25, hi = 4.0, zmax = 4.0;
  const double w = hi - lo;
  f.z_lo = lo;
  f.z_hi = hi;
  f.z_max = zmax;
  f.g = [=](double z) { return smoothstep((z - lo) / w); };
  f.dg = [=](double z) { return smoothstep_d((z - lo) / w) / w; };
  f.d2g = [=](double z) { return smoothstep_d2((z - lo) / w) / (w * w); };
  // h' = 1 − S(z/z_max) on [0, z_max]; h is its primitive.
  f.dh = [=](double z) { return z >= zmax ? 0.0 : 1.0 - smoothstep(z / zmax); };
  f.d2h = [=](double z) { return -smoothstep_d(z / zmax) / zmax; };
  f.h = [=](double z) {
    const double t = std::min(z / zmax, 1.0);
    const double prim = t * t * t * t * (2.5 + t * (-3.0 + t));
    return zmax * (t - prim);
  };
  return f;
}

CouplingValues coupling_eval(double v, double z, const CouplingFns& fns) {
  require_nonneg(v, "v");
  require_nonneg(z, "z");
  return {fns.g(v), fns.dg(v), fns.d2g(v), fns.h(z), fns.dh(z), fns.d2h(z)};
}

}  // namespace swlw
