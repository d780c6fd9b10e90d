// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrbound/dynamics.hpp"
#include "lrbound/graph.hpp"
#include "lrbound/hamiltonian.hpp"
#include "lrbound/numerics.hpp"
#include "lrbound/velocity.hpp"

namespace lrb {

struct CellVertex {
  std::string label;
  double weight = 1.0;           // h_alpha; unused by coefficient cells
  std::optional<TermBody> body;  // home-cell operator when built from a spec
};

/// Undirected edge between alpha in cell I and beta in cell I + offset.
struct CellEdge {
  std::size_t alpha = 0, beta = 0;
  Coord offset;
};

/// Directed coupling H_{(I,from),(I+offset,to)} = weight.
struct CellCoupling {
  std::size_t from = 0, to = 0;
  Coord offset;
  double weight = 0.0;
};

/// Translation-invariant graph datum. Commutativity cells carry undirected
/// edges weighted 2 sqrt(h_a h_b); coefficient cells carry an arbitrary
/// nonnegative (possibly asymmetric) coupling list.
class UnitCellGraph {
 public:
  enum class Kind { commutativity, coefficient };

  /// Commutativity cell. Edges are canonicalized and deduplicated; self-cell
  /// self-loops are rejected.
  UnitCellGraph(int dimension, std::vector<CellVertex> vertices, std::vector<CellEdge> edges,
                VelocityMethod origin = VelocityMethod::graph);
  /// Coefficient cell. Couplings with equal (from, to, offset) are summed.
  static UnitCellGraph coefficient(int dimension, std::vector<std::string> labels, std::vector<CellCoupling> couplings,
                                   VelocityMethod origin = VelocityMethod::fermion);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Kind kind() const noexcept { return kind_; }
  VelocityMethod origin() const noexcept { return origin_; }
  const CellVertex& vertex(std::size_t a) const { return vertices_.at(a); }
  std::optional<std::size_t> find(std::string_view label) const;
  const std::vector<CellEdge>& edges() const noexcept { return edges_; }
  const std::vector<CellCoupling>& couplings() const noexcept { return couplings_; }
  bool hermitian() const noexcept { return kind_ == Kind::commutativity || symmetric_; }

 private:
  UnitCellGraph() = default;

  int dimension_ = 0;
  Kind kind_ = Kind::commutativity;
  VelocityMethod origin_ = VelocityMethod::graph;
  bool symmetric_ = false;
  std::vector<CellVertex> vertices_;
  std::vector<CellEdge> edges_;
  std::vector<CellCoupling> couplings_;
};

/// Commutativity unit cell of a translation-invariant Pauli/Majorana spec:
/// one vertex class per nonzero term, edges from anticommuting translates.
UnitCellGraph unit_cell_from_spec(const HamiltonianSpec& spec);

/// Fermion-method coefficient cell of a translation-invariant Majorana spec:
/// one vertex per flavor; each monomial with coefficient t contributes 2|t|
/// from every mode it contains to each of its other modes.
UnitCellGraph fermion_cell_from_spec(const HamiltonianSpec& spec);

/// Large-parameter elimination on a commutativity cell. Throws
/// std::invalid_argument if two eliminated classes are adjacent.
UnitCellGraph reduce_unit_cell(const UnitCellGraph& ucg, const std::vector<std::size_t>& eliminated);

/// Open finite lattice of extents[0] x ... cells. Vertex id of (cell, alpha)
/// is linear(cell) * size() + alpha with the first axis slowest.
CommutativityGraph expand_unit_cell(const UnitCellGraph& ucg, const std::vector<int>& extents);
CouplingMatrix expand_couplings(const UnitCellGraph& ucg, const std::vector<int>& extents);
std::size_t cell_vertex_index(const UnitCellGraph& ucg, const std::vector<int>& extents, const Coord& cell,
                              std::size_t alpha);

Eigen::MatrixXcd build_hk(const UnitCellGraph& ucg, std::span<const std::complex<double>> k);
/// H^(i kappa), real and entrywise nonnegative.
Eigen::MatrixXd build_h_imag(const UnitCellGraph& ucg, std::span<const double> kappa);

struct DispersionSample {
  std::vector<double> kappa;
  double omega = 0.0;
};

/// Perron eigenvalue of H^(i kappa).
DispersionSample omega_max(const UnitCellGraph& ucg, std::span<const double> kappa);
/// Perron root of a nonnegative matrix: dense solve for n <= 8, shifted power
/// iteration with Collatz-Wielandt bounds otherwise.
double perron_root(const Eigen::MatrixXd& A);

struct VelocityOptions {
  ScanOptions scan;  // defaults: [1e-3, 50], 200 log points, 1e-10
};

/// min over kappa_0 of omega_m(i s kappa_0)/kappa_0 for uniform kappa
/// components, maximized over the 2^d sign sectors s.
VelocityResult lr_velocity(const UnitCellGraph& ucg, const VelocityOptions& opt = {});

struct FourierOptions {
  std::size_t quadrature = 64;  // points per axis, even, >= 16
  bool check_doubling = true;
  double doubling_tol = 1e-9;
};

struct FourierGreen {
  Coord r;
  std::size_t alpha = 0, beta = 0;
  std::vector<double> times;
  std::vector<double> values;
  std::size_t quadrature = 0;  // points per axis actually used
  double doubling_delta = 0.0;
};

/// G_{(0,alpha),(r,beta)}(t) = int d^dk/(2pi)^d [e^{H(k) t}]_{alpha beta} e^{-i k.r}
/// by the periodic trapezoidal rule. With doubling enabled the result comes
/// from the 2n grid after checking it against the n grid.
FourierGreen fourier_green(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta,
                           std::span<const double> times, const FourierOptions& opt = {});

/// [e^{H(i kappa) t}]_{alpha beta} e^{-kappa.r}, bounding G_{(0,alpha),(r,beta)}(t).
double tail_bound(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta, double t,
                  std::span<const double> kappa);

/// tail_bound minimized over kappa = kappa_0 sgn(r) (uniform magnitude).
double tail_bound_optimized(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta, double t,
                            const ScanOptions& scan = {});

}  // namespace lrb
