// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>
#include <random>

#include <doctest.h>

#include "lrbound/dynamics.hpp"
#include "lrbound/error.hpp"
#include "oracles.hpp"

using namespace lrb;

TEST_CASE("green_function matches the dense exponential") {
  std::mt19937_64 rng(3);
  const auto g = oracle::random_graph(rng, 25, 0.15);
  const std::vector<double> times{0.0, 0.3, 1.0, 2.5};
  VertexSet all;
  std::vector<VertexId> ids(g.vertex_count());
  for (VertexId i = 0; i < ids.size(); ++i) ids[i] = i;
  all = VertexSet(ids);
  const auto G = green_function(g, VertexSet{0, 4}, times, all);
  const auto H = oracle::dense(g);
  for (std::size_t k = 0; k < times.size(); ++k) {
    const auto E = oracle::expm(H, times[k]);
    for (VertexId i = 0; i < g.vertex_count(); ++i)
      for (VertexId j : {VertexId{0}, VertexId{4}}) {
        const double ref = E(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        CHECK(G.value(i, j, k) == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
      }
  }
}

TEST_CASE("asymmetric coupling matrices propagate columns") {
  const CouplingMatrix H(2, {{0, 1, 2.0}});
  const std::vector<double> times{1.0};
  const auto G = green_function(H, VertexSet{1}, times, VertexSet{0, 1});
  CHECK(G.value(0, 1, 0) == doctest::Approx(2.0));
  CHECK(G.value(1, 1, 0) == doctest::Approx(1.0));
  CHECK_THROWS(CouplingMatrix(2, {{0, 1, -1.0}}));
}

TEST_CASE("taylor coefficients equal dense matrix powers") {
  std::mt19937_64 rng(5);
  const auto g = oracle::random_graph(rng, 15, 0.2);
  const auto H = oracle::dense(g);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(H.rows(), H.cols());
  for (unsigned n = 0; n < 6; ++n) {
    CHECK(taylor_coefficient(g, 2, 9, n) == doctest::Approx(P(2, 9)).epsilon(1e-12));
    P = P * H;
  }
}

TEST_CASE("operator bounds dominate the Green's function and start at the initial commutator") {
  std::mt19937_64 rng(9);
  const auto g = oracle::random_graph(rng, 20, 0.15);
  const std::vector<double> times{0.0, 0.5, 1.0};
  const auto H = oracle::dense(g);
  const auto bterm = term_operator_bound(g, 0, VertexSet{7}, 1.0, times);
  CHECK(bterm.provenance == BoundKind::term);
  CHECK(bterm.values[0] == 0.0);
  // 2 ||B|| sum_{j in Y} G_ij sqrt(h_j / h_i).
  const double ratio = std::sqrt(g.vertex(7).weight / g.vertex(0).weight);
  for (std::size_t k = 0; k < times.size(); ++k)
    CHECK(bterm.values[k] == doctest::Approx(2.0 * oracle::expm(H, times[k])(0, 7) * ratio).epsilon(1e-9).scale(1e-12));

  OperatorBoundOptions opt;
  opt.initial_commutator = 0.25;
  const auto bop = operator_bound(g, VertexSet{0, 1}, VertexSet{7}, 1.0, 1.0, times, opt);
  CHECK(bop.values[0] == doctest::Approx(0.25));
  for (std::size_t k = 1; k < times.size(); ++k) CHECK(bop.values[k] >= bop.values[k - 1]);

  opt.cap = true;
  const auto capped = operator_bound(g, VertexSet{0}, VertexSet{7}, 1.0, 1.0, std::vector<double>{50.0}, opt);
  CHECK(capped.values[0] <= 2.0);
}

TEST_CASE("factorial bound formula") {
  CHECK(factorial_bound(2.0, 3, 5.0, 0.0) == 0.0);
  CHECK(factorial_bound(2.0, 3, 5.0, 1.0) == doctest::Approx(5.0 * std::pow(2.0 / 4.0, 4)));
  CHECK_THROWS(factorial_bound(0.0, 3, 1.0, 1.0));
  CHECK(factorial_prefactor(0.0, 1.0, 1.0, 1.0, 1.0) == doctest::Approx(2.0 * std::exp(1.0)));
  CHECK(factorial_prefactor(1.0, 3.0, 2.0, 1.0, 2.0) == doctest::Approx(2.0 * std::exp(1.0) * 3.0 * 2.0));
}

TEST_CASE("generic velocity and certified constant") {
  std::vector<VertexInfo> vs(6);
  for (std::size_t i = 0; i < 6; ++i) vs[i] = VertexInfo{"p" + std::to_string(i), 1.0, {}, {}, {}};
  const CommutativityGraph path(vs, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const double u = generic_velocity(path);
  CHECK(u == doctest::Approx(2.0 * 2.0 * 2.0 * std::exp(1.0)));
  const auto cert = certify_velocity_constant(path, u, VertexSet{0});
  CHECK(cert.c > 0.0);
  CHECK(cert.c < 1.0);
  CHECK(geometric_factor(path, VertexSet{0}, VertexSet{5}) == doctest::Approx(1.0));
}

TEST_CASE("tolerance failures raise NumericError") {
  GreenOptions opt;
  opt.max_steps = 1;
  std::vector<VertexInfo> vs(2);
  vs[0] = VertexInfo{"a", 1.0, {}, {}, {}};
  vs[1] = VertexInfo{"b", 1.0, {}, {}, {}};
  const CommutativityGraph g(vs, {{0, 1}});
  CHECK_THROWS_AS(green_function(g, VertexSet{0}, std::vector<double>{100.0}, VertexSet{1}, opt), NumericError);
}
