// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace lrb {

enum class VelocityMethod { graph, fermion, reduced, closed_form, generic };

const char* to_string(VelocityMethod m);

struct VelocityBranch {
  std::string label;
  double value = 0.0;
  bool is_bound = true;  // false for reference asymptotes that do not enter the min
};

struct VelocityResult {
  double value = 0.0;
  std::string branch;
  std::vector<VelocityBranch> branches;
  std::optional<double> baseline;
  VelocityMethod method = VelocityMethod::closed_form;
  double kappa_star = std::numeric_limits<double>::quiet_NaN();
  double omega_at_kappa = std::numeric_limits<double>::quiet_NaN();
  std::string notes;
};

}  // namespace lrb
