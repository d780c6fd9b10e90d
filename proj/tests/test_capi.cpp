// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "lrbound/lrbound.h"

TEST_CASE("status codes and last error") {
  lrb_spec* s = nullptr;
  CHECK(lrb_spec_parse("lattice 1 3 open\nbasis pauli\nterm a 1 Q@(0)\n", &s) == LRB_ERR_SPEC);
  CHECK(s == nullptr);
  CHECK(lrb_last_error_line() == 3);
  CHECK(std::string(lrb_last_error()).find("Q@(0)") != std::string::npos);
  double v = 0.0;
  CHECK(lrb_model_velocity_value("tfim", "J=1", &v) == LRB_ERR_INVALID);
  CHECK(lrb_solve_x(-2.0, &v) == LRB_ERR_INVALID);
  CHECK(lrb_model_velocity_value("tfim", "J=1,h=1,d=2", nullptr) == LRB_ERR_INVALID);
  CHECK(lrb_solve_x(0.0, &v) == LRB_OK);
  CHECK(std::string(lrb_last_error()).empty());
  CHECK(v == doctest::Approx(1.50888).epsilon(1e-5));
}

TEST_CASE("builtin spec to graph to bound") {
  lrb_spec* s = nullptr;
  REQUIRE(lrb_spec_builtin("tfim", "J=1,h=1,d=1", "8", "open", &s) == LRB_OK);
  int ti = 1;
  CHECK(lrb_spec_translation_invariant(s, &ti) == LRB_OK);
  CHECK(ti == 0);
  lrb_graph* g = nullptr;
  REQUIRE(lrb_graph_build(s, &g) == LRB_OK);
  size_t n = 0, a = 0, b = 0, d = 0;
  CHECK(lrb_graph_vertex_count(g, &n) == LRB_OK);
  CHECK(n == 15);
  REQUIRE(lrb_graph_find(g, "X@(1)", &a) == LRB_OK);
  REQUIRE(lrb_graph_find(g, "X@(5)", &b) == LRB_OK);
  CHECK(lrb_graph_find(g, "nope", &a) == LRB_ERR_INVALID);
  CHECK(lrb_graph_distance(g, &a, 1, &b, 1, &d) == LRB_OK);
  CHECK(d == 8);
  size_t ids[4], count = 0;
  CHECK(lrb_graph_support(g, s, "Z@(3)", ids, 4, &count) == LRB_OK);
  CHECK(count == 1);

  const double times[] = {0.0, 1.0};
  for (const char* mode : {"term", "operator", "factorial"}) {
    lrb_table* t = nullptr;
    REQUIRE(lrb_operator_bound(g, mode, &a, 1, &b, 1, 1.0, 1.0, times, 2, 0.0, &t) == LRB_OK);
    CHECK(lrb_table_rows(t) == 2);
    CHECK(std::string(lrb_table_column(t, 1)) == "bound");
    CHECK(lrb_table_number(t, 0, 1) == 0.0);
    CHECK(lrb_table_number(t, 1, 1) > 0.0);
    CHECK(std::string(lrb_table_text(t, 1, 2)) == mode);
    CHECK(std::isnan(lrb_table_number(t, 1, 2)));
    CHECK(lrb_table_text(t, 1, 1) == nullptr);
    CHECK(lrb_table_text(t, 9, 9) == nullptr);
    lrb_table_free(t);
  }
  lrb_table* t = nullptr;
  CHECK(lrb_operator_bound(g, "eq99", &a, 1, &b, 1, 1.0, 1.0, times, 2, 0.0, &t) == LRB_ERR_INVALID);

  char* text = nullptr;
  REQUIRE(lrb_graph_export(g, &text) == LRB_OK);
  CHECK(std::strstr(text, "edge") != nullptr);
  lrb_string_free(text);

  lrb_graph* r = nullptr;
  REQUIRE(lrb_graph_reduce_classes(g, "ZZ_1", &r) == LRB_OK);
  CHECK(lrb_graph_vertex_count(r, &n) == LRB_OK);
  CHECK(n == 8);
  CHECK(lrb_graph_reduce_classes(g, "ZZ_1,X", &r) == LRB_ERR_INVALID);
  lrb_graph_free(r);
  lrb_graph_free(g);
  lrb_spec_free(s);
}

TEST_CASE("unit cells through the C API") {
  lrb_spec* s = nullptr;
  REQUIRE(lrb_spec_builtin("tfim", "J=1,h=1,d=2", nullptr, nullptr, &s) == LRB_OK);
  lrb_cell* c = nullptr;
  REQUIRE(lrb_cell_from_spec(s, 0, &c) == LRB_OK);
  double v = 0.0, k = 0.0;
  REQUIRE(lrb_cell_velocity_value(c, &v, &k) == LRB_OK);
  double ref = 0.0;
  REQUIRE(lrb_model_velocity_value("tfim", "J=1,h=1,d=2", &ref) == LRB_OK);
  CHECK(v == doctest::Approx(ref).epsilon(1e-8));
  CHECK(k > 0.0);
  size_t x = 0;
  REQUIRE(lrb_cell_find(c, "X", &x) == LRB_OK);
  const int r[] = {1, 0};
  const double times[] = {1.0};
  lrb_table* t = nullptr;
  REQUIRE(lrb_cell_fourier_green(c, r, x, x, times, 1, 32, &t) == LRB_OK);
  const double G = lrb_table_number(t, 0, 4);
  lrb_table_free(t);
  double tail = 0.0;
  REQUIRE(lrb_cell_tail_bound(c, r, x, x, 1.0, nullptr, &tail) == LRB_OK);
  CHECK(tail >= G);
  lrb_cell* red = nullptr;
  CHECK(lrb_cell_reduce(c, "missing", &red) == LRB_ERR_INVALID);
  lrb_cell_free(c);
  lrb_spec_free(s);
}

TEST_CASE("report tables") {
  lrb_table* t = nullptr;
  REQUIRE(lrb_table1(&t) == LRB_OK);
  CHECK(lrb_table_rows(t) == 9);
  CHECK(lrb_table_cols(t) == 5);
  lrb_table_free(t);
  REQUIRE(lrb_fig4(0.0, 80.0, 9, &t) == LRB_OK);
  CHECK(lrb_table_rows(t) == 9);
  lrb_table_free(t);
  double plateau = 0.0;
  REQUIRE(lrb_xi_report(1.0, 0.01, 100.0, 5, nullptr, &t, &plateau) == LRB_OK);
  CHECK(plateau > 0.0);
  lrb_table_free(t);
  CHECK(lrb_fig6(0.0, 1.0, 3, nullptr, &t) == LRB_ERR_INVALID);
  lrb_table_free(nullptr);
}
