// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "lrbound/graph.hpp"

namespace lrb {

/// Entrywise-nonnegative sparse matrix in CSR form; the coefficient matrix of
/// the bounding ODE dx/dt = H x.
class CouplingMatrix {
 public:
  struct Entry {
    std::size_t row, col;
    double value;
  };

  CouplingMatrix() = default;
  /// Duplicate (row, col) entries are summed. Throws on negative or
  /// non-finite values.
  CouplingMatrix(std::size_t n, std::vector<Entry> entries);
  static CouplingMatrix from_graph(const CommutativityGraph& g);

  std::size_t size() const noexcept { return n_; }
  void multiply(std::span<const double> x, std::span<double> y) const;
  double norm_inf() const noexcept { return norm_inf_; }
  bool symmetric(double tol = 0.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_;
  std::vector<double> val_;
  double norm_inf_ = 0.0;
};

struct GreenOptions {
  double tolerance = 1e-10;          // relative to the column max-norm
  double step_norm = 2.0;            // ||H||_inf * tau per Taylor step
  std::size_t max_terms_per_step = 120;
  std::size_t max_steps = 50'000'000;
};

enum class GreenMethod { series, integrator };

/// G_ij(t) for i in targets, j in sources, on an ascending time grid.
class GreenEvaluation {
 public:
  GreenEvaluation(std::vector<double> times, VertexSet sources, VertexSet targets, GreenMethod method);

  const std::vector<double>& times() const noexcept { return times_; }
  const VertexSet& sources() const noexcept { return sources_; }
  const VertexSet& targets() const noexcept { return targets_; }
  GreenMethod method() const noexcept { return method_; }
  double& at(std::size_t target_pos, std::size_t source_pos, std::size_t time_pos);
  double at(std::size_t target_pos, std::size_t source_pos, std::size_t time_pos) const;
  /// Lookup by vertex id; throws std::out_of_range if (i, j) was not requested.
  double value(VertexId i, VertexId j, std::size_t time_pos) const;

 private:
  std::vector<double> times_;
  VertexSet sources_, targets_;
  GreenMethod method_;
  std::vector<double> values_;
};

/// [e^{Ht}]_ij via Taylor-series time stepping of e^{Ht} e_j. The truncation
/// error estimate is checked against `tolerance`; failure throws NumericError.
GreenEvaluation green_function(const CouplingMatrix& H, const VertexSet& sources, std::span<const double> times,
                               const VertexSet& targets, const GreenOptions& opt = {});
GreenEvaluation green_function(const CommutativityGraph& g, const VertexSet& sources, std::span<const double> times,
                               const VertexSet& targets, const GreenOptions& opt = {});

/// [H^n]_ij by n sparse matrix-vector products.
double taylor_coefficient(const CouplingMatrix& H, VertexId i, VertexId j, unsigned n);
double taylor_coefficient(const CommutativityGraph& g, VertexId i, VertexId j, unsigned n);

enum class BoundKind { term, support, factorial, trivial };

struct BoundCurve {
  std::vector<double> times;
  std::vector<double> values;
  BoundKind provenance = BoundKind::support;
  bool capped = false;
};

struct OperatorBoundOptions {
  double initial_commutator = 0.0;  // ||[A_X(0), B_Y(0)]||, operator mode only
  bool cap = false;                 // clamp at 2||A|| ||B||
  GreenOptions green;
};

/// Bound on ||[gamma_i(t), B]|| for a single Hamiltonian term i; Y = S(B).
BoundCurve term_operator_bound(const CommutativityGraph& g, VertexId i, const VertexSet& Y, double normB,
                               std::span<const double> times, const OperatorBoundOptions& opt = {});

/// Bound on ||[A_X(t), B_Y]|| with X = S(A), Y = S(B); the time integral of
/// the Green's function is accumulated alongside the propagation.
BoundCurve operator_bound(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y, double normA,
                          double normB, std::span<const double> times, const OperatorBoundOptions& opt = {});

/// C (u t / (dXY + 1))^(dXY + 1), computed in log space.
double factorial_bound(double u, std::size_t dXY, double prefactorC, double t);

/// 2 lambda h e with lambda the max degree and h the max edge weight.
double generic_velocity(const CommutativityGraph& g);

/// h_XY = sum_{i in X, j in Y} sqrt(h_i h_j) e^{d_XY - d_ij}.
double geometric_factor(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y);

/// 2e max{1, 2 c h_XY / u} ||A|| ||B||.
double factorial_prefactor(double c, double hXY, double u, double normA, double normB);

struct VelocityCertificate {
  double c = 0.0;  // max G_ij(d_ij / u) over the sampled pairs
  VertexId i = 0, j = 0;
  std::size_t distance = 0;
};

/// Empirical constant c with G_ij(d_ij/u) <= c for every j in sources and every
/// reachable i at distance 1..max_distance (0 = no cap).
VelocityCertificate certify_velocity_constant(const CommutativityGraph& g, double u, const VertexSet& sources,
                                              std::size_t max_distance = 0, const GreenOptions& opt = {});

}  // namespace lrb
