// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>
#include <Eigen/Eigenvalues>

#include "lrbound/builtins.hpp"
#include "lrbound/error.hpp"
#include "lrbound/models.hpp"
#include "lrbound/special.hpp"
#include "lrbound/ti.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

UnitCellGraph tfim_cell(int d, double J, double h) {
  ModelParams p{"tfim", {{"d", double(d)}, {"J", J}, {"h", h}}};
  return unit_cell_from_spec(builtin_spec(p));
}

}  // namespace

TEST_CASE("TFIM unit cell has one field class and d bond classes") {
  const auto c = tfim_cell(2, 1.0, 0.5);
  CHECK(c.size() == 3);
  CHECK(c.hermitian());
  CHECK(c.find("X").has_value());
  CHECK(c.find("ZZ_2").has_value());
}

TEST_CASE("H(k) is Hermitian and H(i kappa) is nonnegative") {
  const auto c = tfim_cell(2, 1.3, 0.7);
  const std::vector<std::complex<double>> k{{0.4, 0.0}, {-1.1, 0.0}};
  const auto Hk = build_hk(c, k);
  CHECK((Hk - Hk.adjoint()).norm() < 1e-14);
  const std::vector<double> kap{0.3, -0.8};
  const auto Hi = build_h_imag(c, kap);
  CHECK(Hi.minCoeff() >= 0.0);
  const std::vector<std::complex<double>> ik{{0.0, -0.3}, {0.0, 0.8}};
  CHECK((build_hk(c, ik).real() - Hi).norm() < 1e-12);
}

TEST_CASE("perron_root agrees with a dense eigensolver above the dense cutoff") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {3, 12, 30}) {
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = u(rng) < 0.3 ? 0.0 : u(rng);
    Eigen::EigenSolver<Eigen::MatrixXd> es(A);
    double ref = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) ref = std::max(ref, es.eigenvalues()[k].real());
    CHECK(perron_root(A) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("1D TFIM engine velocity equals the closed form") {
  const double v = lr_velocity(tfim_cell(1, 1.0, 2.0)).value;
  CHECK(v == doctest::Approx(2.0 * solve_X(0.0) * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("cells without inter-cell couplings have zero velocity") {
  const auto c = UnitCellGraph(1, {CellVertex{"a", 1.0, {}}, CellVertex{"b", 1.0, {}}}, {CellEdge{0, 1, {0}}});
  CHECK(lr_velocity(c).value == 0.0);
}

TEST_CASE("Fourier Green's function approaches the large finite lattice") {
  const auto c = tfim_cell(1, 1.0, 1.0);
  const std::vector<double> times{0.5, 1.5};
  const auto X = *c.find("X");
  const auto G = fourier_green(c, Coord{3}, X, X, times);
  const std::vector<int> ext{41};
  const auto g = expand_unit_cell(c, ext);
  const auto src = cell_vertex_index(c, ext, Coord{20}, X), tgt = cell_vertex_index(c, ext, Coord{23}, X);
  const auto Gf = green_function(g, VertexSet{src}, times, VertexSet{tgt});
  for (std::size_t k = 0; k < times.size(); ++k) CHECK(G.values[k] == doctest::Approx(Gf.value(tgt, src, k)).epsilon(1e-9));
  CHECK(G.doubling_delta < 1e-9);
}

TEST_CASE("tail bound dominates the Fourier Green's function") {
  const auto c = tfim_cell(1, 1.0, 1.0);
  const auto X = *c.find("X");
  const std::vector<double> times{1.0};
  const double G = fourier_green(c, Coord{4}, X, X, times).values[0];
  const std::vector<double> kap{1.0};
  CHECK(tail_bound(c, Coord{4}, X, X, 1.0, kap) >= G);
  const double best = tail_bound_optimized(c, Coord{4}, X, X, 1.0);
  CHECK(best >= G - 1e-12);
  CHECK(best <= tail_bound(c, Coord{4}, X, X, 1.0, kap) + 1e-12);
}

TEST_CASE("reduced TFIM cells reproduce the large-coupling branches in 1D") {
  const auto c = tfim_cell(1, 1.0, 1.0);
  const auto no_j = reduce_unit_cell(c, {*c.find("ZZ_1")});
  CHECK(lr_velocity(no_j).value == doctest::Approx(4.0 * solve_X(0.0)).epsilon(1e-9));
  CHECK_THROWS_AS(reduce_unit_cell(c, {*c.find("ZZ_1"), *c.find("X")}), std::invalid_argument);
}

TEST_CASE("coefficient cells sum duplicate couplings and detect asymmetry") {
  const auto sym = UnitCellGraph::coefficient(1, {"a"}, {{0, 0, {1}, 1.0}, {0, 0, {-1}, 0.5}, {0, 0, {-1}, 0.5}});
  CHECK(sym.hermitian());
  const auto asym = UnitCellGraph::coefficient(1, {"a"}, {{0, 0, {1}, 2.0}, {0, 0, {-1}, 0.5}});
  CHECK_FALSE(asym.hermitian());
  const std::vector<double> times{1.0};
  const auto G = fourier_green(asym, Coord{0}, 0, 0, times);
  CHECK(G.values[0] == doctest::Approx(std::cyl_bessel_i(0.0, 2.0 * std::sqrt(2.0 * 0.5))).epsilon(1e-9));
}
