#pragma once

#include <vector>

#include "swlw/errors.hpp"

namespace swlw {

// Thomas algorithm for a(i)·x(i−1) + b(i)·x(i) + c(i)·x(i+1) = d(i). Overwrites d.
template <class T>
void solve_tridiagonal(const std::vector<T>& a, const std::vector<T>& b,
                       const std::vector<T>& c, std::vector<T>& d) {
  const std::size_t n = b.size();
  if (n == 0) return;
  std::vector<T> cp(n);
  T denom = b[0];
  if (denom == T(0)) throw NumericalError("tridiagonal solve: zero pivot");
  cp[0] = c[0] / denom;
  d[0] = d[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = b[i] - a[i] * cp[i - 1];
    if (denom == T(0)) throw NumericalError("tridiagonal solve: zero pivot");
    cp[i] = c[i] / denom;
    d[i] = (d[i] - a[i] * d[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) d[i] -= cp[i] * d[i + 1];
}

}  // namespace swlw
