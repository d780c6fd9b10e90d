// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include "lrbound/numerics.hpp"

namespace lrb {

/// Positive root x of x asinh(x) = sqrt(x^2 + 1) + y, equivalently
/// min over k > 0 of (cosh k + y)/k. X_{-1} = 0. Throws for y < -1.
double solve_X(double y);

struct ZResult {
  double value = 0.0;
  double kappa = 0.0;
};

/// min over k > 0 of [cosh k + sqrt(cosh^2 k + 4 y (1 + cosh k))]/k.
/// Throws NumericError when the scan finds no interior minimum.
ZResult solve_Z_detail(double y, const ScanOptions& scan = {});
double solve_Z(double y);

/// Modified Bessel function of the first kind I_n(x), x >= 0.
double bessel_i(int n, double x);
/// Bessel function of the first kind J_n(x), x >= 0.
double bessel_j(int n, double x);

/// Principal branch W_0(x) for x >= -1/e.
double lambert_w0(double x);

}  // namespace lrb
