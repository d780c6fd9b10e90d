// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lrbound/dynamics.hpp"
#include "lrbound/graph.hpp"
#include "lrbound/hamiltonian.hpp"
#include "lrbound/ti.hpp"
#include "lrbound/velocity.hpp"

namespace lrb {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::logic_error on a width mismatch.
  void add(std::vector<Cell> row);
};

/// model,expression,value,baseline,ratio (ratio = baseline/value).
Table table1();
/// U_over_J,fermion,commutativity,large_U,baseline for 1D SU(2) FH at J = 1.
Table fig4(double lo, double hi, std::size_t points);
/// h_over_J,xi_inv_ours,xi_inv_previous,xi_inv_exact.
Table fig6(double lo, double hi, std::size_t points, std::optional<double> gap = std::nullopt);

/// branch,value,is_bound,selected,method,kappa_star,baseline.
Table velocity_table(const VelocityResult& v);
/// t,target,source,G.
Table green_table(const GreenEvaluation& G, const CommutativityGraph& g);
/// t,r,alpha,beta,G.
Table fourier_table(const FourierGreen& G, const UnitCellGraph& ucg);
/// t,bound,provenance.
Table bound_table(const BoundCurve& b);
/// kappa,omega,omega_over_kappa along a uniform kappa direction (all +).
Table dispersion_table(const UnitCellGraph& ucg, std::span<const double> kappas);
/// key,value rows for Clifford verification and graph statistics.
Table check_table(const HamiltonianSpec& spec);

const char* to_string(BoundKind k);

}  // namespace lrb
