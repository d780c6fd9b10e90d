// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lrbound/error.hpp"

namespace lrb {

double solve_X(double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("solve_X: y must be finite");
  if (y < -1.0) throw std::invalid_argument("solve_X: y must be >= -1, got " + format_real(y));
  if (y == -1.0) return 0.0;
  // F(x) = x asinh x - sqrt(x^2+1) - y is increasing on x > 0 with F(0) = -1 - y < 0.
  auto F = [y](double x) { return x * std::asinh(x) - std::hypot(x, 1.0) - y; };
  double lo = 0.0, hi = 1.0;
  while (F(hi) < 0.0) hi *= 2.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = F(x);
    if (f < 0.0) lo = x; else hi = x;
    const double slope = std::asinh(x);
    double next = slope > 0.0 ? x - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * next || hi - lo <= 1e-15 * hi) return next;
    x = next;
  }
  return x;
}

ZResult solve_Z_detail(double y, const ScanOptions& scan) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw std::invalid_argument("solve_Z: y must be finite and >= 0");
  auto f = [y](double k) {
    const double c = std::cosh(k);
    return (c + std::sqrt(c * c + 4.0 * y * (1.0 + c))) / k;
  };
  const auto m = minimize_scan_golden(f, scan);
  if (!m.interior) throw NumericError("solve_Z: no interior minimum for y = " + format_real(y));
  return {m.value, m.x};
}

double solve_Z(double y) { return solve_Z_detail(y).value; }

double bessel_i(int n, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("bessel_i: x must be >= 0");
  n = std::abs(n);
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  // All terms positive: sum the ratio series then scale by the first term.
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + n));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  const double log_first = n * std::log(0.5 * x) - std::lgamma(n + 1.0);
  return std::exp(log_first + std::log(sum));
}

namespace {

double bessel_j_series(int n, double x) {
  const double q = -0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + n));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::exp(n * std::log(0.5 * x) - std::lgamma(n + 1.0)) * sum;
}

// Miller's backward recurrence normalized by J_0 + 2 sum J_2k = 1.
double bessel_j_miller(int n, double x) {
  const double top = std::max<double>(n, x);
  int m = static_cast<int>(top + 30.0 + 10.0 * std::sqrt(top));
  m += m % 2;
  double jp = 0.0, j = 1e-300, norm = 0.0, result = 0.0;
  for (int k = m; k > 0; --k) {
    const double jm = 2.0 * k / x * j - jp;
    jp = j;
    j = jm;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp *= 1e-250;
      norm *= 1e-250;
      result *= 1e-250;
    }
    // j now holds J_{k-1}
    if (k - 1 == n) result = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
  }
  norm += j;
  return result / norm;
}

}  // namespace

double bessel_j(int n, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("bessel_j: x must be >= 0");
  const double sign = (n < 0 && (-n) % 2 == 1) ? -1.0 : 1.0;
  n = std::abs(n);
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x <= 1.0) return sign * bessel_j_series(n, x);
  return sign * bessel_j_miller(n, x);
}

double lambert_w0(double x) {
  constexpr double inv_e = 1.0 / std::numbers::e;
  if (std::isnan(x) || x < -inv_e) throw std::invalid_argument("lambert_w0: x must be >= -1/e");
  if (x == -inv_e) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  double w;
  if (x < 0.25) {
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    w = x < -0.3 ? -1.0 + p - p * p / 3.0 : x * (1.0 - x);
  } else if (x < 3.0) {
    w = 0.5 * std::log1p(x) + 0.2;
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= dw;
    if (std::abs(dw) <= 1e-16 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace lrb
