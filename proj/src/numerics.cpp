// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lrb {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = b;
  return out;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("logspace: endpoints must be positive");
  auto exps = linspace(std::log10(a), std::log10(b), n);
  for (auto& e : exps) e = std::pow(10.0, e);
  if (n > 0) {
    exps.front() = a;
    exps.back() = b;
  }
  return exps;
}

ScanMinimum minimize_scan_golden(const std::function<double(double)>& f, const ScanOptions& opt) {
  if (opt.points < 3 || !(opt.hi > opt.lo)) throw std::invalid_argument("minimize_scan_golden: bad bracket");
  const auto grid = opt.log_spaced ? logspace(opt.lo, opt.hi, opt.points) : linspace(opt.lo, opt.hi, opt.points);
  std::vector<double> vals(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (vals[i] < vals[best]) best = i;
  }
  ScanMinimum out{grid[best], vals[best], false, best};
  if (best == 0 || best + 1 == grid.size()) return out;
  out.interior = vals[best - 1] > vals[best] && vals[best + 1] > vals[best];

  // Golden-section search on [a, b] around the grid minimum
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[best - 1], b = grid[best + 1];
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > opt.rel_tol * std::abs(out.x); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double xm = fc < fd ? c : d;
  const double fm = std::min(fc, fd);
  if (fm <= out.value) {
    out.x = xm;
    out.value = fm;
  }
  return out;
}

}  // namespace lrb
