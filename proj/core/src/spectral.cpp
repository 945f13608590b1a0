#include "swlw/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct SpectralGrid::Plans {
  fftw_plan dct = nullptr;  // REDFT00, size M+1
  fftw_plan dst = nullptr;  // RODFT00, size M−1

  explicit Plans(int M) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::vector<double> in(M + 1), out(M + 1);
    dct = fftw_plan_r2r_1d(M + 1, in.data(), out.data(), FFTW_REDFT00, flags);
    dst = fftw_plan_r2r_1d(M - 1, in.data(), out.data(), FFTW_RODFT00, flags);
    if (!dct || !dst) throw NumericalError("FFTW planning failed");
  }
  ~Plans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(dct);
    fftw_destroy_plan(dst);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

SpectralGrid::SpectralGrid(int M, double L) : M_(M), L_(L) {
  if (M < 2) throw ValidationError("collocation grid needs M >= 2");
  if (!(L > 0)) throw ValidationError("domain length must be positive");
  y_.resize(M + 1);
  w_.assign(M + 1, L / M);
  for (int j = 0; j <= M; ++j) y_[j] = L * j / M;
  w_[0] = w_[M] = 0.5 * L / M;
  plans_ = std::make_shared<Plans>(M);
}

double SpectralGrid::wavenumber(int k) const { return k * std::numbers::pi / L_; }

std::vector<double> SpectralGrid::cosine_transform(const std::vector<double>& f) const {
  if (static_cast<int>(f.size()) != M_ + 1)
    throw ShapeError("cosine transform: expected M+1 nodal values");
  std::vector<double> in(f), out(M_ + 1);
  fftw_execute_r2r(plans_->dct, in.data(), out.data());
  for (auto& c : out) c /= M_;
  return out;
}

std::vector<double> SpectralGrid::sine_transform(const std::vector<double>& f) const {
  if (static_cast<int>(f.size()) != M_ + 1)
    throw ShapeError("sine transform: expected M+1 nodal values");
  std::vector<double> in(f.begin() + 1, f.end() - 1), out(M_ - 1);
  fftw_execute_r2r(plans_->dst, in.data(), out.data());
  for (auto& c : out) c /= M_;
  return out;
}

std::vector<double> SpectralGrid::project_sine(const std::vector<double>& f, int n) const {
  if (n > M_ - 1) throw ShapeError("sine projection: n exceeds M-1");
  auto s = sine_transform(f);
  s.resize(n);
  return s;
}

std::vector<double> SpectralGrid::project_cosine(const std::vector<double>& f, int n) const {
  if (n > M_) throw ShapeError("cosine projection: n exceeds M");
  auto c = cosine_transform(f);
  c.resize(n + 1);
  c[0] *= 0.5;
  if (n == M_) c[n] *= 0.5;
  return c;
}

cvec SpectralGrid::project_sine(const cvec& f, int n) const {
  std::vector<double> re(f.size()), im(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    re[j] = f[j].real();
    im[j] = f[j].imag();
  }
  auto a = project_sine(re, n), b = project_sine(im, n);
  cvec out(n);
  for (int k = 0; k < n; ++k) out[k] = {a[k], b[k]};
  return out;
}

std::vector<double> SpectralGrid::synth_sine(const std::vector<double>& coef) const {
  if (static_cast<int>(coef.size()) > M_ - 1) throw ShapeError("sine synthesis: too many modes");
  std::vector<double> in(M_ - 1, 0.0), out(M_ - 1);
  std::copy(coef.begin(), coef.end(), in.begin());
  fftw_execute_r2r(plans_->dst, in.data(), out.data());
  std::vector<double> f(M_ + 1, 0.0);
  for (int j = 1; j < M_; ++j) f[j] = 0.5 * out[j - 1];
  return f;
}

cvec SpectralGrid::synth_sine(const cvec& coef) const {
  std::vector<double> re(coef.size()), im(coef.size());
  for (std::size_t k = 0; k < coef.size(); ++k) {
    re[k] = coef[k].real();
    im[k] = coef[k].imag();
  }
  auto a = synth_sine(re), b = synth_sine(im);
  cvec f(M_ + 1);
  for (int j = 0; j <= M_; ++j) f[j] = {a[j], b[j]};
  return f;
}

std::vector<double> SpectralGrid::synth_cosine(const std::vector<double>& coef) const {
  if (static_cast<int>(coef.size()) > M_ + 1)
    throw ShapeError("cosine synthesis: too many modes");
  std::vector<double> in(M_ + 1, 0.0), out(M_ + 1);
  std::copy(coef.begin(), coef.end(), in.begin());
  in[0] *= 2.0;
  if (static_cast<int>(coef.size()) == M_ + 1) in[M_] *= 2.0;
  fftw_execute_r2r(plans_->dct, in.data(), out.data());
  for (auto& v : out) v *= 0.5;
  return out;
}

std::vector<double> SpectralGrid::synth_sine_dy(const std::vector<double>& coef) const {
  std::vector<double> c(coef.size() + 1, 0.0);
  for (std::size_t k = 1; k <= coef.size(); ++k) c[k] = wavenumber(static_cast<int>(k)) * coef[k - 1];
  return synth_cosine(c);
}

cvec SpectralGrid::synth_sine_dy(const cvec& coef) const {
  std::vector<double> re(coef.size()), im(coef.size());
  for (std::size_t k = 0; k < coef.size(); ++k) {
    re[k] = coef[k].real();
    im[k] = coef[k].imag();
  }
  auto a = synth_sine_dy(re), b = synth_sine_dy(im);
  cvec f(M_ + 1);
  for (int j = 0; j <= M_; ++j) f[j] = {a[j], b[j]};
  return f;
}

std::vector<double> SpectralGrid::synth_cosine_dy(const std::vector<double>& coef) const {
  const int len = std::min(static_cast<int>(coef.size()), M_);
  std::vector<double> s(len > 1 ? len - 1 : 0);
  for (int k = 1; k < len; ++k) s[k - 1] = -wavenumber(k) * coef[k];
  return synth_sine(s);
}

std::vector<double> SpectralGrid::sine_of_derivative(const std::vector<double>& F, int n) const {
  if (n > M_ - 1) throw ShapeError("derivative projection: n exceeds M-1");
  auto c = cosine_transform(F);
  std::vector<double> out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = -wavenumber(k) * c[k];
  return out;
}

double SpectralGrid::integrate(const std::vector<double>& f) const {
  if (static_cast<int>(f.size()) != M_ + 1) throw ShapeError("integrate: expected M+1 values");
  double s = 0.0;
  for (int j = 0; j <= M_; ++j) s += w_[j] * f[j];
  return s;
}

namespace {

// Accumulates Σ c_k·e^{i(k+offset)θ} weighted by `scale(k)` via the rotation recurrence.
template <class Scale>
std::complex<double> phase_sum(const std::vector<double>& coef, double th, int offset,
                               Scale scale) {
  const std::complex<double> rot(std::cos(th), std::sin(th));
  std::complex<double> z(std::cos(offset * th), std::sin(offset * th));
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    acc += coef[k] * scale(static_cast<int>(k) + offset) * z;
    z *= rot;
  }
  return acc;
}

}  // namespace

double eval_sine(const std::vector<double>& coef, double L, double y) {
  const double th = std::numbers::pi * y / L;
  return phase_sum(coef, th, 1, [](int) { return 1.0; }).imag();
}

double eval_sine_dy(const std::vector<double>& coef, double L, double y) {
  const double th = std::numbers::pi * y / L;
  return phase_sum(coef, th, 1, [L](int k) { return k * std::numbers::pi / L; }).real();
}

double eval_cosine(const std::vector<double>& coef, double L, double y) {
  const double th = std::numbers::pi * y / L;
  return phase_sum(coef, th, 0, [](int) { return 1.0; }).real();
}

double eval_cosine_dy(const std::vector<double>& coef, double L, double y) {
  const double th = std::numbers::pi * y / L;
  return -phase_sum(coef, th, 0, [L](int k) { return k * std::numbers::pi / L; }).imag();
}

}  // namespace swlw
