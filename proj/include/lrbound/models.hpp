// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lrbound/hamiltonian.hpp"
#include "lrbound/ti.hpp"
#include "lrbound/velocity.hpp"

namespace lrb {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Cartesian-distance rotor velocity coefficient of sqrt(gJ), kept as a
/// literature reference; it uses a different distance convention.
inline constexpr double kWenCartesianCoefficient = 2.396;

struct ModelParams {
  std::string model;
  std::map<std::string, double, std::less<>> values;

  bool has(std::string_view key) const;
  /// Throws std::invalid_argument naming the missing key.
  double get(std::string_view key) const;
  double get_or(std::string_view key, double fallback) const;
};

/// Accepts reals, fractions ("3/2") and "inf".
double parse_param_value(std::string_view text);
/// Parses "k=v,k=v" and validates keys and ranges against the model id.
ModelParams parse_model_params(std::string_view model, std::string_view assignments);
/// Range and key validation of an already-populated parameter set.
void validate_model_params(const ModelParams& p);

const std::vector<std::string>& model_ids();

/// Closed-form velocity: every applicable branch plus the winning minimum.
VelocityResult model_velocity(const ModelParams& p);
bool has_baseline(const ModelParams& p);
/// Prior-art velocity. Throws std::invalid_argument when the model has none.
double baseline_velocity(const ModelParams& p);

/// Largest singular value of [[0,Jy,Jz],[Jx,0,Jz],[Jx,Jy,0]].
double heisenberg_jm(double Jx, double Jy, double Jz);

/// Perron eigenvalue of the truncated-BH 2x2 system at uniform imaginary
/// momentum kappa.
double truncated_bh_omega(double S, double U, double J, int d, double kappa);

/// 2 e^{(2N-1) U t / 2} prod_m I_{x_m}(2 J t).
double fh_anticommutator_bound(const Coord& x, double t, double J, double U, int N);
/// 2 |prod_m J_{x_m}(2 J t)|.
double free_fermion_exact(const Coord& x, double t, double J);

/// Coefficient cell of the FH fermion-method equations (2N Majorana flavors
/// per site on the hypercubic lattice).
UnitCellGraph fh_fermion_cell(int N, int d, double J, double U);
/// Coefficient cell of the modified FH equations with the quartic operators
/// kept as extra variables.
UnitCellGraph fh_modified_cell(int N, int d, double J, double U);

}  // namespace lrb
