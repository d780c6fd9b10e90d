// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>
#include <random>

#include <doctest.h>

#include "lrbound/graph.hpp"
#include "lrbound/hamiltonian.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

HamiltonianSpec tfim_chain(int L, double J, double h) {
  std::string text = "lattice 1 " + std::to_string(L) + " open\nbasis pauli\n";
  for (int i = 0; i < L; ++i) text += "term x" + std::to_string(i) + " " + std::to_string(h) + " X@(" + std::to_string(i) + ")\n";
  for (int i = 0; i + 1 < L; ++i)
    text += "term zz" + std::to_string(i) + " " + std::to_string(J) + " Z@(" + std::to_string(i) + ") Z@(" +
            std::to_string(i + 1) + ")\n";
  return parse_spec(text);
}

}  // namespace

TEST_CASE("TFIM chain graph is a path with weights 2 sqrt(h_i h_j)") {
  const auto g = build_graph(tfim_chain(5, 4.0, 1.0));
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 8);
  CHECK(g.max_degree() == 2);
  CHECK(g.max_edge_weight() == doctest::Approx(2.0 * std::sqrt(4.0)));
  const auto x0 = *g.find("x0"), zz0 = *g.find("zz0"), x1 = *g.find("x1");
  CHECK(g.adjacent(x0, zz0));
  CHECK_FALSE(g.adjacent(x0, x1));
  CHECK(graph_distance(g, VertexSet{x0}, VertexSet{*g.find("x4")}) == 8);
}

TEST_CASE("zero-coefficient terms are dropped") {
  const auto g = build_graph(parse_spec("lattice 1 2 open\nbasis pauli\nterm a 0 X@(0)\nterm b 1 Z@(0)\n"));
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("BFS distances agree with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_graph(rng, 30, 0.08);
    const auto ref = oracle::hop_distances(g);
    for (VertexId s = 0; s < g.vertex_count(); s += 7) {
      const auto d = bfs_distances(g, VertexSet{s});
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        if (ref[s][t] < 0) CHECK(d[t] == kUnreachable);
        else CHECK(d[t] == static_cast<std::size_t>(ref[s][t]));
      }
    }
  }
}

TEST_CASE("reduce_graph contracts two-hop paths through eliminated vertices") {
  // Path a - f - b - g - c with f, g eliminated gives a - b - c.
  std::vector<VertexInfo> vs(5);
  const char* names[] = {"a", "f", "b", "g", "c"};
  for (int i = 0; i < 5; ++i) vs[static_cast<std::size_t>(i)] = VertexInfo{names[i], 1.0 + i, {}, {}, {}};
  const CommutativityGraph g(vs, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto r = reduce_graph(g, VertexSet{1, 3});
  CHECK(r.vertex_count() == 3);
  CHECK(r.edge_count() == 2);
  const auto a = *r.find("a"), b = *r.find("b"), c = *r.find("c");
  CHECK(r.adjacent(a, b));
  CHECK(r.adjacent(b, c));
  CHECK_FALSE(r.adjacent(a, c));
  CHECK_THROWS_AS(reduce_graph(g, VertexSet{1, 2}), std::invalid_argument);
}

TEST_CASE("support_of finds anticommuting terms") {
  const auto spec = tfim_chain(4, 1.0, 1.0);
  const auto g = build_graph(spec);
  const auto S = support_of(g, parse_operator("Z@(1)", spec));
  CHECK(S == VertexSet{*g.find("x1")});
  const auto T = support_of(g, parse_operator("X@(1)", spec));
  CHECK(T == VertexSet{*g.find("zz0"), *g.find("zz1")});
}

TEST_CASE("custom graphs and edge-list export") {
  const auto g = build_graph(parse_spec("basis custom\nvertex a 1\nvertex b 4\nedge a b\n"));
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0)[0].weight == doctest::Approx(4.0));
  const auto text = export_edge_list(g);
  CHECK(text.find("edge 0 1") != std::string::npos);
}
