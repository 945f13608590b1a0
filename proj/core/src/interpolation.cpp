#include "swlw/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

double end_slope(double h0, double h1, double del0, double del1) {
  double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
  if (d * del0 <= 0.0) return 0.0;
  if (del0 * del1 < 0.0 && std::abs(d) > std::abs(3.0 * del0)) return 3.0 * del0;
  return d;
}

}  // namespace

Pchip::Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw ShapeError("pchip needs >= 2 matching samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw ValidationError("pchip abscissae must increase strictly");
  std::vector<double> h(n - 1), del(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    del[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  d_.assign(n, 0.0);
  if (n == 2) {
    d_[0] = d_[1] = del[0];
    return;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] > 0.0) {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
    }
  }
  d_[0] = end_slope(h[0], h[1], del[0], del[1]);
  d_[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

std::size_t Pchip::interval(double xq) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), xq);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double Pchip::operator()(double xq) const {
  const std::size_t i = interval(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double Pchip::derivative(double xq) const {
  const std::size_t i = interval(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6 * t2 - 6 * t) / h, d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h, d11 = 3 * t2 - 2 * t;
  return d00 * y_[i] + d10 * d_[i] + d01 * y_[i + 1] + d11 * d_[i + 1];
}

double lagrange_uniform(const std::vector<double>& f, double x0, double dx, double xq,
                        int points) {
  const int n = static_cast<int>(f.size());
  if (n == 0) throw ShapeError("interpolation of an empty field");
  points = std::min(points, n);
  const double s = (xq - x0) / dx;
  int start = static_cast<int>(std::floor(s)) - (points / 2 - 1);
  start = std::clamp(start, 0, n - points);
  double acc = 0.0;
  for (int j = 0; j < points; ++j) {
    double lj = 1.0;
    const double sj = start + j;
    for (int m = 0; m < points; ++m) {
      if (m == j) continue;
      lj *= (s - (start + m)) / (sj - (start + m));
    }
    acc += lj * f[start + j];
  }
  return acc;
}

}  // namespace swlw
