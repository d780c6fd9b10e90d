// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <optional>
#include <vector>

namespace lrb {

/// Principal-branch Lambert W for x >= 0.
double lambert_w(double x);

/// Correlation-length lower bound from the gap and the LR velocity:
/// Delta/(2u) for Delta <= u, W(Delta^2 e/u^2)/2 otherwise. Delta = 0 gives 0.
double xi_inverse_bound(double gap, double u);

/// max over mu > 0 of mu/(1 + 16 J e^mu / Delta).
double xi_inverse_previous(double gap, double J);

struct ExactXi {
  double value = 0.0;
  bool critical = false;  // J == h
};

/// |ln(J/h)| for the 1D TFIM.
ExactXi xi_inverse_exact_tfim(double J, double h);

struct XiRow {
  double h_over_J = 0.0;
  double ours = 0.0;
  double previous = 0.0;
  double exact = 0.0;
  bool critical = false;
};

struct XiReport {
  std::vector<XiRow> rows;
  double previous_plateau = 0.0;  // previous bound at h -> 0 with the same gap convention
};

/// 1D TFIM comparison on a log grid of h/J in [lo, hi]. The velocity is the
/// closed-form 1D TFIM cell velocity; the gap defaults to 2|J - h|.
XiReport tfim_xi_report(double J, double lo, double hi, std::size_t points, std::optional<double> gap = std::nullopt);

}  // namespace lrb
