#include "swlw/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "swlw/errors.hpp"

namespace swlw {

namespace {
constexpr double kPi = std::numbers::pi;
}

void InitialData::validate() const {
  std::vector<std::string> v;
  const bool known = profile == "smooth-periodic" || profile == "gaussian-psi" ||
                     profile == "near-constant" || profile == "constant";
  if (!known) v.push_back("unknown initial profile '" + profile + "'");
  if (!(rho_mean > 0)) v.push_back("rho_mean > 0 required");
  if (!(std::abs(rho_amplitude) < rho_mean)) v.push_back("|rho_amplitude| < rho_mean required");
  if (!(theta_mean > 0)) v.push_back("theta_mean > 0 required");
  if (!(std::abs(theta_amplitude) < theta_mean))
    v.push_back("|theta_amplitude| < theta_mean required");
  if (!(psi_width > 0)) v.push_back("psi_width > 0 required");
  if (!(mollify_scale >= 0)) v.push_back("mollify_scale >= 0 required");
  if (!v.empty()) throw ValidationError(std::move(v));
}

double Profile::x_of_mass(double y) const {
  const double d = total_mass();
  if (y <= 0) return 0.0;
  if (y >= d) return 1.0;
  double lo = 0.0, hi = 1.0, x = y / d;
  for (int it = 0; it < 100; ++it) {
    const double f = mass(x) - y;
    if (f > 0) hi = x; else lo = x;
    const double step = f / rho(x);
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) < 1e-16) { x = xn; break; }
    x = xn;
  }
  return x;
}

Profile make_profile(const InitialData& d, double epsilon) {
  d.validate();
  Profile p;
  double scale = 1.0;
  if (d.profile == "near-constant") scale = 0.01;
  const bool flat = d.profile == "constant" || d.profile == "gaussian-psi";
  const double rm = d.rho_mean;
  double ra = flat ? 0.0 : scale * d.rho_amplitude;
  if (d.mollify) ra *= std::exp(-4.0 * kPi * kPi * d.mollify_scale * epsilon);
  p.rho = [=](double x) { return rm + ra * std::cos(2 * kPi * x); };
  p.mass = [=](double x) { return rm * x + ra * std::sin(2 * kPi * x) / (2 * kPi); };
  const double ua = flat ? 0.0 : scale * d.u_amplitude;
  const double wa = flat ? 0.0 : scale * d.w_amplitude;
  const double ha = flat ? 0.0 : scale * d.h_amplitude;
  const double tm = d.theta_mean;
  const double ta = flat ? 0.0 : scale * d.theta_amplitude;
  p.u = [=](double x) { return ua * std::sin(kPi * x); };
  p.w[0] = [=](double x) { return wa * std::sin(kPi * x); };
  p.w[1] = [=](double x) { return 0.5 * wa * std::sin(2 * kPi * x); };
  p.h[0] = [=](double x) { return ha * std::sin(kPi * x); };
  p.h[1] = [=](double x) { return 0.5 * ha * std::sin(2 * kPi * x); };
  p.theta = [=](double x) { return tm + ta * std::cos(kPi * x); };
  const double a1 = d.psi_amplitude, a2 = d.psi_amplitude2;
  if (d.profile == "constant") {
    p.psi = [](double) { return std::complex<double>(0.0, 0.0); };
  } else if (d.profile == "gaussian-psi") {
    const double c = d.psi_center, wdt = d.psi_width;
    p.psi = [=](double xi) {
      const double g = std::exp(-((xi - c) / wdt) * ((xi - c) / wdt));
      return std::complex<double>(a1 * g * std::sin(kPi * xi), 0.0);
    };
  } else {
    const double s1 = scale * a1, s2 = scale * a2;
    p.psi = [=](double xi) {
      return std::complex<double>(s1 * std::sin(kPi * xi), s2 * std::sin(2 * kPi * xi));
    };
  }
  return p;
}

}  // namespace swlw
