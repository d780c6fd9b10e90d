// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/corr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lrbound/models.hpp"
#include "lrbound/numerics.hpp"
#include "lrbound/special.hpp"

namespace lrb {

double lambert_w(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("lambert_w: x must be >= 0");
  return lambert_w0(x);
}

double xi_inverse_bound(double gap, double u) {
  if (!(gap >= 0.0) || !std::isfinite(gap)) throw std::invalid_argument("xi_inverse_bound: gap must be finite and >= 0");
  if (!(u > 0.0) || !std::isfinite(u)) throw std::invalid_argument("xi_inverse_bound: velocity must be finite and > 0");
  if (gap <= u) return gap / (2.0 * u);
  return 0.5 * lambert_w(gap * gap * std::numbers::e / (u * u));
}

double xi_inverse_previous(double gap, double J) {
  if (!(gap >= 0.0) || !std::isfinite(gap)) throw std::invalid_argument("xi_inverse_previous: gap must be finite and >= 0");
  if (!(J > 0.0) || !std::isfinite(J)) throw std::invalid_argument("xi_inverse_previous: J must be finite and > 0");
  if (gap == 0.0) return 0.0;
  const double a = 16.0 * J / gap;
  auto f = [a](double mu) { return -mu / (1.0 + a * std::exp(mu)); };
  ScanOptions opt;
  opt.lo = 1e-4;
  opt.hi = 60.0 + 2.0 * std::log1p(1.0 / a);
  opt.points = 400;
  const auto m = minimize_scan_golden(f, opt);
  return -m.value;
}

ExactXi xi_inverse_exact_tfim(double J, double h) {
  if (!(J > 0.0) || !(h > 0.0)) throw std::invalid_argument("xi_inverse_exact_tfim: J and h must be > 0");
  if (J == h) return {0.0, true};
  return {std::abs(std::log(J / h)), false};
}

XiReport tfim_xi_report(double J, double lo, double hi, std::size_t points, std::optional<double> gap) {
  if (!(J > 0.0)) throw std::invalid_argument("tfim_xi_report: J must be > 0");
  if (!(lo > 0.0) || !(hi >= lo) || points == 0) throw std::invalid_argument("tfim_xi_report: bad h/J grid");
  if (gap && !(*gap >= 0.0)) throw std::invalid_argument("tfim_xi_report: gap must be >= 0");
  XiReport rep;
  for (double r : points == 1 ? std::vector<double>{lo} : logspace(lo, hi, points)) {
    const double h = r * J;
    ModelParams p{"tfim", {{"J", J}, {"h", h}, {"d", 1.0}}};
    const double u = model_velocity(p).value;
    const double D = gap ? *gap : 2.0 * std::abs(J - h);
    const auto ex = xi_inverse_exact_tfim(J, h);
    rep.rows.push_back({r, xi_inverse_bound(D, u), xi_inverse_previous(D, J), ex.value, ex.critical});
  }
  rep.previous_plateau = xi_inverse_previous(gap ? *gap : 2.0 * J, J);
  return rep;
}

}  // namespace lrb
