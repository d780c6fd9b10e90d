// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lrb {

/// 17-significant-digit rendering (round-trips through strtod).
std::string format_real(double x);

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> logspace(double a, double b, std::size_t n);  // a, b > 0

struct ScanMinimum {
  double x = 0.0;
  double value = 0.0;
  bool interior = false;  // scan minimum had larger neighbors on both sides
  std::size_t scan_index = 0;
};

struct ScanOptions {
  double lo = 1e-3;
  double hi = 50.0;
  std::size_t points = 200;
  double rel_tol = 1e-10;
  bool log_spaced = true;
};

/// Minimizes f on [lo, hi]: scan on a grid, then golden-section refinement in
/// the bracket around the best grid point. When the best grid point is an
/// endpoint no refinement happens and `interior` is false.
ScanMinimum minimize_scan_golden(const std::function<double(double)>& f, const ScanOptions& opt);

}  // namespace lrb
