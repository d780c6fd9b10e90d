// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/lrbound.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lrbound/builtins.hpp"
#include "lrbound/corr.hpp"
#include "lrbound/dynamics.hpp"
#include "lrbound/error.hpp"
#include "lrbound/graph.hpp"
#include "lrbound/hamiltonian.hpp"
#include "lrbound/models.hpp"
#include "lrbound/report.hpp"
#include "lrbound/special.hpp"
#include "lrbound/ti.hpp"

struct lrb_spec {
  lrb::HamiltonianSpec spec;
};
struct lrb_graph {
  lrb::CommutativityGraph graph;
};
struct lrb_cell {
  lrb::UnitCellGraph cell;
};
struct lrb_table {
  lrb::Table table;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

template <class F>
lrb_status guard(F&& f) {
  g_error.clear();
  g_error_line = 0;
  try {
    f();
    return LRB_OK;
  } catch (const lrb::SpecError& e) {
    g_error = e.what();
    g_error_line = e.line();
    return LRB_ERR_SPEC;
  } catch (const lrb::NumericError& e) {
    g_error = e.what();
    return LRB_ERR_NUMERIC;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return LRB_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return LRB_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return LRB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return LRB_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return LRB_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

lrb::VertexSet id_set(const size_t* ids, size_t n, const lrb::CommutativityGraph& g, const char* what) {
  if (n && !ids) throw std::invalid_argument(std::string(what) + " must not be NULL");
  std::vector<lrb::VertexId> v(ids, ids + n);
  for (auto i : v)
    if (i >= g.vertex_count()) throw std::invalid_argument(std::string(what) + ": vertex id out of range");
  return lrb::VertexSet(std::move(v));
}

std::vector<std::string> split_csv(const char* s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

lrb::ModelParams params_of(const char* model, const char* params) {
  need(model, "model");
  return lrb::parse_model_params(model, params ? params : "");
}

lrb::GreenOptions green_opts(double tol) {
  lrb::GreenOptions o;
  if (tol > 0.0) o.tolerance = tol;
  return o;
}

void emit(lrb_table** out, lrb::Table t) {
  need(out, "out");
  *out = new lrb_table{std::move(t)};
}

}  // namespace

extern "C" {

const char* lrb_version(void) { return "0.1.0"; }
const char* lrb_last_error(void) { return g_error.c_str(); }
int lrb_last_error_line(void) { return g_error_line; }

lrb_status lrb_spec_parse(const char* text, lrb_spec** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new lrb_spec{lrb::parse_spec(text)};
  });
}

lrb_status lrb_spec_load(const char* path, lrb_spec** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new lrb_spec{lrb::load_spec(path)};
  });
}

lrb_status lrb_spec_builtin(const char* model, const char* params, const char* extents, const char* boundary,
                            lrb_spec** out) {
  return guard([&] {
    need(out, "out");
    const auto p = params_of(model, params);
    lrb::LatticeChoice lat;
    if (extents) {
      for (const auto& e : split_csv(extents)) {
        std::size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(e, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != e.size()) throw std::invalid_argument("bad lattice extent '" + e + "'");
        lat.extents.push_back(v);
      }
      const std::string b = boundary ? boundary : "open";
      if (b == "open") lat.boundary = lrb::Boundary::open;
      else if (b == "periodic") lat.boundary = lrb::Boundary::periodic;
      else throw std::invalid_argument("boundary must be open or periodic");
    }
    *out = new lrb_spec{lrb::builtin_spec(p, lat)};
  });
}

lrb_status lrb_spec_translation_invariant(const lrb_spec* spec, int* out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = spec->spec.translation_invariant() ? 1 : 0;
  });
}

lrb_status lrb_spec_majorana(const lrb_spec* spec, int* out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = spec->spec.basis == lrb::BasisKind::majorana ? 1 : 0;
  });
}

lrb_status lrb_spec_check(const lrb_spec* spec, lrb_table** out) {
  return guard([&] {
    need(spec, "spec");
    emit(out, lrb::check_table(spec->spec));
  });
}

void lrb_spec_free(lrb_spec* spec) { delete spec; }

lrb_status lrb_graph_build(const lrb_spec* spec, lrb_graph** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new lrb_graph{lrb::build_graph(spec->spec)};
  });
}

lrb_status lrb_graph_reduce(const lrb_graph* g, const size_t* F, size_t nF, lrb_graph** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new lrb_graph{lrb::reduce_graph(g->graph, id_set(F, nF, g->graph, "F"))};
  });
}

lrb_status lrb_graph_reduce_classes(const lrb_graph* g, const char* classes, lrb_graph** out) {
  return guard([&] {
    need(g, "graph");
    need(classes, "classes");
    need(out, "out");
    const auto names = split_csv(classes);
    if (names.empty()) throw std::invalid_argument("no classes to eliminate");
    std::vector<bool> used(names.size(), false);
    std::vector<lrb::VertexId> F;
    for (lrb::VertexId v = 0; v < g->graph.vertex_count(); ++v) {
      const auto& label = g->graph.vertex(v).label;
      const std::string cls = label.substr(0, label.find('@'));
      for (std::size_t k = 0; k < names.size(); ++k)
        if (cls == names[k]) {
          F.push_back(v);
          used[k] = true;
        }
    }
    for (std::size_t k = 0; k < names.size(); ++k)
      if (!used[k]) throw std::invalid_argument("no vertex of class '" + names[k] + "'");
    *out = new lrb_graph{lrb::reduce_graph(g->graph, lrb::VertexSet(std::move(F)))};
  });
}

lrb_status lrb_graph_vertex_count(const lrb_graph* g, size_t* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->graph.vertex_count();
  });
}

lrb_status lrb_graph_edge_count(const lrb_graph* g, size_t* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->graph.edge_count();
  });
}

lrb_status lrb_graph_find(const lrb_graph* g, const char* label, size_t* out) {
  return guard([&] {
    need(g, "graph");
    need(label, "label");
    need(out, "out");
    const auto v = g->graph.find(label);
    if (!v) throw std::invalid_argument("no vertex labeled '" + std::string(label) + "'");
    *out = *v;
  });
}

lrb_status lrb_graph_support(const lrb_graph* g, const lrb_spec* spec, const char* factors, size_t* ids, size_t cap,
                             size_t* count) {
  return guard([&] {
    need(g, "graph");
    need(spec, "spec");
    need(factors, "factors");
    need(count, "count");
    if (cap && !ids) throw std::invalid_argument("ids must not be NULL");
    const auto body = lrb::parse_operator(factors, spec->spec);
    const auto S = lrb::support_of(g->graph, body);
    for (std::size_t k = 0; k < S.size() && k < cap; ++k) ids[k] = S.ids()[k];
    *count = S.size();
  });
}

lrb_status lrb_graph_distance(const lrb_graph* g, const size_t* X, size_t nX, const size_t* Y, size_t nY, size_t* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = lrb::graph_distance(g->graph, id_set(X, nX, g->graph, "X"), id_set(Y, nY, g->graph, "Y"));
  });
}

lrb_status lrb_graph_generic_velocity(const lrb_graph* g, double* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = lrb::generic_velocity(g->graph);
  });
}

lrb_status lrb_graph_velocity(const lrb_graph* g, lrb_table** out) {
  return guard([&] {
    need(g, "graph");
    lrb::VelocityResult v;
    v.value = lrb::generic_velocity(g->graph);
    v.branch = "2*lambda*h*e";
    v.branches = {{v.branch, v.value, true}};
    v.method = lrb::VelocityMethod::generic;
    emit(out, lrb::velocity_table(v));
  });
}

lrb_status lrb_graph_export(const lrb_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const auto s = lrb::export_edge_list(g->graph);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void lrb_graph_free(lrb_graph* g) { delete g; }
void lrb_string_free(char* s) { delete[] s; }

lrb_status lrb_green(const lrb_graph* g, const size_t* sources, size_t ns, const size_t* targets, size_t nt,
                     const double* times, size_t ntimes, double tol, lrb_table** out) {
  return guard([&] {
    need(g, "graph");
    if (ntimes && !times) throw std::invalid_argument("times must not be NULL");
    const auto S = id_set(sources, ns, g->graph, "sources");
    const auto T = id_set(targets, nt, g->graph, "targets");
    const auto G = lrb::green_function(g->graph, S, std::span<const double>(times, ntimes), T, green_opts(tol));
    emit(out, lrb::green_table(G, g->graph));
  });
}

lrb_status lrb_operator_bound(const lrb_graph* g, const char* mode, const size_t* X, size_t nX, const size_t* Y,
                              size_t nY, double normA, double normB, const double* times, size_t ntimes, double tol,
                              lrb_table** out) {
  return guard([&] {
    need(g, "graph");
    need(mode, "mode");
    if (ntimes && !times) throw std::invalid_argument("times must not be NULL");
    const auto XS = id_set(X, nX, g->graph, "X");
    const auto YS = id_set(Y, nY, g->graph, "Y");
    const std::span<const double> ts(times, ntimes);
    lrb::OperatorBoundOptions opt;
    opt.green = green_opts(tol);
    const std::string m = mode;
    lrb::BoundCurve curve;
    if (m == "term") {
      if (XS.size() != 1) throw std::invalid_argument("term mode bounds a single term: X must have exactly one vertex");
      curve = lrb::term_operator_bound(g->graph, XS.ids()[0], YS, normB, ts, opt);
    } else if (m == "operator") {
      curve = lrb::operator_bound(g->graph, XS, YS, normA, normB, ts, opt);
    } else if (m == "factorial") {
      if (XS.empty() || YS.empty()) throw std::invalid_argument("factorial bound needs nonempty X and Y");
      const double u = lrb::generic_velocity(g->graph);
      if (!(u > 0.0)) throw std::invalid_argument("factorial bound needs a graph with edges");
      const auto cert = lrb::certify_velocity_constant(g->graph, u, XS, 0, opt.green);
      const double C = lrb::factorial_prefactor(cert.c, lrb::geometric_factor(g->graph, XS, YS), u, normA, normB);
      const auto d = lrb::graph_distance(g->graph, XS, YS);
      curve.provenance = lrb::BoundKind::factorial;
      for (double t : ts) {
        curve.times.push_back(t);
        curve.values.push_back(d == lrb::kUnreachable ? 0.0 : lrb::factorial_bound(u, d, C, t));
      }
    } else {
      throw std::invalid_argument("mode must be term, operator or factorial");
    }
    emit(out, lrb::bound_table(curve));
  });
}

lrb_status lrb_taylor_coefficient(const lrb_graph* g, size_t i, size_t j, unsigned n, double* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (i >= g->graph.vertex_count() || j >= g->graph.vertex_count())
      throw std::invalid_argument("vertex id out of range");
    *out = lrb::taylor_coefficient(g->graph, i, j, n);
  });
}

lrb_status lrb_cell_from_spec(const lrb_spec* spec, int fermion, lrb_cell** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new lrb_cell{fermion ? lrb::fermion_cell_from_spec(spec->spec) : lrb::unit_cell_from_spec(spec->spec)};
  });
}

lrb_status lrb_cell_fh(const char* which, int N, int d, double J, double U, lrb_cell** out) {
  return guard([&] {
    need(which, "which");
    need(out, "out");
    const std::string w = which;
    if (w == "fermion") *out = new lrb_cell{lrb::fh_fermion_cell(N, d, J, U)};
    else if (w == "modified") *out = new lrb_cell{lrb::fh_modified_cell(N, d, J, U)};
    else throw std::invalid_argument("FH cell must be fermion or modified");
  });
}

lrb_status lrb_cell_reduce(const lrb_cell* cell, const char* classes, lrb_cell** out) {
  return guard([&] {
    need(cell, "cell");
    need(classes, "classes");
    need(out, "out");
    std::vector<std::size_t> F;
    for (const auto& name : split_csv(classes)) {
      const auto a = cell->cell.find(name);
      if (!a) throw std::invalid_argument("no vertex class '" + name + "'");
      F.push_back(*a);
    }
    if (F.empty()) throw std::invalid_argument("no classes to eliminate");
    *out = new lrb_cell{lrb::reduce_unit_cell(cell->cell, F)};
  });
}

lrb_status lrb_cell_size(const lrb_cell* cell, size_t* out) {
  return guard([&] {
    need(cell, "cell");
    need(out, "out");
    *out = cell->cell.size();
  });
}

lrb_status lrb_cell_dimension(const lrb_cell* cell, int* out) {
  return guard([&] {
    need(cell, "cell");
    need(out, "out");
    *out = cell->cell.dimension();
  });
}

lrb_status lrb_cell_find(const lrb_cell* cell, const char* label, size_t* out) {
  return guard([&] {
    need(cell, "cell");
    need(label, "label");
    need(out, "out");
    const auto a = cell->cell.find(label);
    if (!a) throw std::invalid_argument("no vertex class '" + std::string(label) + "'");
    *out = *a;
  });
}

lrb_status lrb_cell_expand(const lrb_cell* cell, const int* extents, lrb_graph** out) {
  return guard([&] {
    need(cell, "cell");
    need(extents, "extents");
    need(out, "out");
    std::vector<int> ext(extents, extents + cell->cell.dimension());
    *out = new lrb_graph{lrb::expand_unit_cell(cell->cell, ext)};
  });
}

lrb_status lrb_cell_velocity(const lrb_cell* cell, lrb_table** out) {
  return guard([&] {
    need(cell, "cell");
    emit(out, lrb::velocity_table(lrb::lr_velocity(cell->cell)));
  });
}

lrb_status lrb_cell_velocity_value(const lrb_cell* cell, double* v, double* kappa_star) {
  return guard([&] {
    need(cell, "cell");
    need(v, "v");
    const auto r = lrb::lr_velocity(cell->cell);
    *v = r.value;
    if (kappa_star) *kappa_star = r.kappa_star;
  });
}

lrb_status lrb_cell_dispersion(const lrb_cell* cell, const double* kappas, size_t n, lrb_table** out) {
  return guard([&] {
    need(cell, "cell");
    if (n && !kappas) throw std::invalid_argument("kappas must not be NULL");
    emit(out, lrb::dispersion_table(cell->cell, std::span<const double>(kappas, n)));
  });
}

lrb_status lrb_cell_fourier_green(const lrb_cell* cell, const int* r, size_t alpha, size_t beta, const double* times,
                                  size_t ntimes, size_t quad, lrb_table** out) {
  return guard([&] {
    need(cell, "cell");
    need(r, "r");
    if (ntimes && !times) throw std::invalid_argument("times must not be NULL");
    lrb::FourierOptions opt;
    if (quad) opt.quadrature = quad;
    const lrb::Coord rc(r, r + cell->cell.dimension());
    const auto G = lrb::fourier_green(cell->cell, rc, alpha, beta, std::span<const double>(times, ntimes), opt);
    emit(out, lrb::fourier_table(G, cell->cell));
  });
}

lrb_status lrb_cell_tail_bound(const lrb_cell* cell, const int* r, size_t alpha, size_t beta, double t,
                               const double* kappa, double* out) {
  return guard([&] {
    need(cell, "cell");
    need(r, "r");
    need(out, "out");
    const auto d = static_cast<std::size_t>(cell->cell.dimension());
    const lrb::Coord rc(r, r + d);
    *out = kappa ? lrb::tail_bound(cell->cell, rc, alpha, beta, t, std::span<const double>(kappa, d))
                 : lrb::tail_bound_optimized(cell->cell, rc, alpha, beta, t);
  });
}

void lrb_cell_free(lrb_cell* cell) { delete cell; }

lrb_status lrb_solve_x(double y, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::solve_X(y);
  });
}

lrb_status lrb_solve_z(double y, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::solve_Z(y);
  });
}

lrb_status lrb_model_velocity(const char* model, const char* params, lrb_table** out) {
  return guard([&] {
    const auto p = params_of(model, params);
    auto v = lrb::model_velocity(p);
    if (lrb::has_baseline(p)) v.baseline = lrb::baseline_velocity(p);
    emit(out, lrb::velocity_table(v));
  });
}

lrb_status lrb_model_velocity_value(const char* model, const char* params, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::model_velocity(params_of(model, params)).value;
  });
}

lrb_status lrb_model_baseline(const char* model, const char* params, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::baseline_velocity(params_of(model, params));
  });
}

lrb_status lrb_fh_anticommutator_bound(const int* x, size_t d, double t, double J, double U, int N, double* out) {
  return guard([&] {
    need(out, "out");
    if (d && !x) throw std::invalid_argument("x must not be NULL");
    *out = lrb::fh_anticommutator_bound(lrb::Coord(x, x + d), t, J, U, N);
  });
}

lrb_status lrb_free_fermion_exact(const int* x, size_t d, double t, double J, double* out) {
  return guard([&] {
    need(out, "out");
    if (d && !x) throw std::invalid_argument("x must not be NULL");
    *out = lrb::free_fermion_exact(lrb::Coord(x, x + d), t, J);
  });
}

lrb_status lrb_lambert_w(double x, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::lambert_w(x);
  });
}

lrb_status lrb_xi_inverse_bound(double gap, double u, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::xi_inverse_bound(gap, u);
  });
}

lrb_status lrb_xi_inverse_previous(double gap, double J, double* out) {
  return guard([&] {
    need(out, "out");
    *out = lrb::xi_inverse_previous(gap, J);
  });
}

lrb_status lrb_xi_inverse_exact_tfim(double J, double h, double* out, int* critical) {
  return guard([&] {
    need(out, "out");
    const auto r = lrb::xi_inverse_exact_tfim(J, h);
    *out = r.value;
    if (critical) *critical = r.critical ? 1 : 0;
  });
}

lrb_status lrb_xi_report(double J, double lo, double hi, size_t n, const double* gap, lrb_table** out,
                         double* previous_plateau) {
  return guard([&] {
    const auto rep = lrb::tfim_xi_report(J, lo, hi, n, gap ? std::optional<double>(*gap) : std::nullopt);
    lrb::Table t{{"h_over_J", "xi_inv_ours", "xi_inv_previous", "xi_inv_exact"}, {}};
    for (const auto& r : rep.rows) t.add({r.h_over_J, r.ours, r.previous, r.exact});
    emit(out, std::move(t));
    if (previous_plateau) *previous_plateau = rep.previous_plateau;
  });
}

lrb_status lrb_table1(lrb_table** out) {
  return guard([&] { emit(out, lrb::table1()); });
}

lrb_status lrb_fig4(double lo, double hi, size_t n, lrb_table** out) {
  return guard([&] { emit(out, lrb::fig4(lo, hi, n)); });
}

lrb_status lrb_fig6(double lo, double hi, size_t n, const double* gap, lrb_table** out) {
  return guard([&] { emit(out, lrb::fig6(lo, hi, n, gap ? std::optional<double>(*gap) : std::nullopt)); });
}

size_t lrb_table_rows(const lrb_table* t) { return t ? t->table.rows.size() : 0; }
size_t lrb_table_cols(const lrb_table* t) { return t ? t->table.columns.size() : 0; }

const char* lrb_table_column(const lrb_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

int lrb_table_is_number(const lrb_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.columns.size()) return 0;
  return std::holds_alternative<double>(t->table.rows[row][col]) ? 1 : 0;
}

double lrb_table_number(const lrb_table* t, size_t row, size_t col) {
  if (!lrb_table_is_number(t, row, col)) return std::nan("");
  return std::get<double>(t->table.rows[row][col]);
}

const char* lrb_table_text(const lrb_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.columns.size()) return nullptr;
  const auto* s = std::get_if<std::string>(&t->table.rows[row][col]);
  return s ? s->c_str() : nullptr;
}

void lrb_table_free(lrb_table* t) { delete t; }

}  // extern "C"
