// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <string_view>
#include <vector>

#include "lrbound/hamiltonian.hpp"
#include "lrbound/models.hpp"

namespace lrb {

struct LatticeChoice {
  std::vector<int> extents;  // empty: translation-invariant unit cell
  Boundary boundary = Boundary::translation_invariant;
};

/// Models with an operator-level spec: tfim, tfim-spin-s (2S spin-1/2 copies
/// per site as sublattices), ptc (toric code on edge sublattices 0 and 1 with
/// an X perturbation), fh-sun (Majorana form, flavors 2a and 2a+1 for mode a).
bool has_builtin_spec(std::string_view model);

/// Translation-invariant spec by default; with extents, every home-cell term
/// is translated over the lattice (open boundaries drop terms that leave it,
/// periodic ones wrap).
HamiltonianSpec builtin_spec(const ModelParams& p, const LatticeChoice& lattice = {});

}  // namespace lrb
