// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/report.hpp"

#include <cmath>
#include <stdexcept>

#include "lrbound/corr.hpp"
#include "lrbound/models.hpp"

namespace lrb {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match the header");
  rows.push_back(std::move(row));
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::term: return "term";
    case BoundKind::support: return "operator";
    case BoundKind::factorial: return "factorial";
    case BoundKind::trivial: return "trivial";
  }
  return "unknown";
}

namespace {

const VelocityBranch& branch(const VelocityResult& v, std::string_view label) {
  for (const auto& b : v.branches)
    if (b.label == label) return b;
  throw std::logic_error("missing velocity branch '" + std::string(label) + "'");
}

}  // namespace

Table table1() {
  Table t{{"model", "expression", "value", "baseline", "ratio"}, {}};
  struct Row {
    const char* model;
    ModelParams params;
    const char* expression;
  };
  const ModelParams tfim{"tfim", {{"d", 2.0}, {"J", 1.0}, {"h", 1.0}}};
  const ModelParams fh_u1{"fh-sun", {{"d", 1.0}, {"N", 2.0}, {"J", 1.0}, {"U", 1.0}}};
  const ModelParams fh_u5{"fh-sun", {{"d", 1.0}, {"N", 2.0}, {"J", 1.0}, {"U", 5.0}}};
  const ModelParams ptc{"ptc", {{"h", 1.0}}};
  const std::vector<Row> rows = {
      {"2D TFIM", tfim, "2X0*sqrt(2Jh)"}, {"2D TFIM", tfim, "8X_{1/2}J"}, {"2D TFIM", tfim, "8X0h"},
      {"1D FH", fh_u1, "2X_{3U/4J}J"},    {"1D FH", fh_u1, "8X0J"},       {"1D FH", fh_u5, "Z_{U/J}J"},
      {"PTC", ptc, "8X_{1/2}h"},          {"PTC", ptc, "2X0*sqrt(2h)"},  {"PTC", ptc, "8X0"},
  };
  for (const auto& r : rows) {
    const auto v = model_velocity(r.params);
    const double value = branch(v, r.expression).value;
    const double base = baseline_velocity(r.params);
    t.add({std::string(r.model), std::string(r.expression), value, base, base / value});
  }
  return t;
}

Table fig4(double lo, double hi, std::size_t points) {
  if (!(lo >= 0.0) || !(hi >= lo) || points == 0) throw std::invalid_argument("fig4: bad U/J range");
  Table t{{"U_over_J", "fermion", "commutativity", "large_U", "baseline"}, {}};
  for (double u : points == 1 ? std::vector<double>{lo} : linspace(lo, hi, points)) {
    const ModelParams p{"fh-sun", {{"d", 1.0}, {"N", 2.0}, {"J", 1.0}, {"U", u}}};
    const auto v = model_velocity(p);
    t.add({u, v.branches.at(0).value, v.branches.at(1).value, v.branches.at(2).value, baseline_velocity(p)});
  }
  return t;
}

Table fig6(double lo, double hi, std::size_t points, std::optional<double> gap) {
  Table t{{"h_over_J", "xi_inv_ours", "xi_inv_previous", "xi_inv_exact"}, {}};
  const auto rep = tfim_xi_report(1.0, lo, hi, points, gap);
  for (const auto& r : rep.rows) t.add({r.h_over_J, r.ours, r.previous, r.exact});
  return t;
}

Table velocity_table(const VelocityResult& v) {
  Table t{{"branch", "value", "is_bound", "selected", "method", "kappa_star", "baseline"}, {}};
  const double base = v.baseline ? *v.baseline : std::nan("");
  for (const auto& b : v.branches)
    t.add({b.label, b.value, std::string(b.is_bound ? "true" : "false"), std::string(b.label == v.branch ? "true" : "false"),
           std::string(to_string(v.method)), v.kappa_star, base});
  return t;
}

Table green_table(const GreenEvaluation& G, const CommutativityGraph& g) {
  Table t{{"t", "target", "source", "G"}, {}};
  for (std::size_t k = 0; k < G.times().size(); ++k)
    for (std::size_t a = 0; a < G.targets().size(); ++a)
      for (std::size_t b = 0; b < G.sources().size(); ++b)
        t.add({G.times()[k], g.vertex(G.targets().ids()[a]).label, g.vertex(G.sources().ids()[b]).label, G.at(a, b, k)});
  return t;
}

Table fourier_table(const FourierGreen& G, const UnitCellGraph& ucg) {
  Table t{{"t", "r", "alpha", "beta", "G"}, {}};
  std::string r = "(";
  for (std::size_t i = 0; i < G.r.size(); ++i) r += (i ? "," : "") + std::to_string(G.r[i]);
  r += ")";
  for (std::size_t k = 0; k < G.times.size(); ++k)
    t.add({G.times[k], r, ucg.vertex(G.alpha).label, ucg.vertex(G.beta).label, G.values[k]});
  return t;
}

Table bound_table(const BoundCurve& b) {
  Table t{{"t", "bound", "provenance"}, {}};
  for (std::size_t k = 0; k < b.times.size(); ++k) t.add({b.times[k], b.values[k], std::string(to_string(b.provenance))});
  return t;
}

Table dispersion_table(const UnitCellGraph& ucg, std::span<const double> kappas) {
  Table t{{"kappa", "omega", "omega_over_kappa"}, {}};
  std::vector<double> k(static_cast<std::size_t>(ucg.dimension()));
  for (double x : kappas) {
    std::fill(k.begin(), k.end(), x);
    const double w = omega_max(ucg, k).omega;
    t.add({x, w, x == 0.0 ? std::nan("") : w / x});
  }
  return t;
}

Table check_table(const HamiltonianSpec& spec) {
  Table t{{"key", "value"}, {}};
  const auto rep = verify_clifford(spec);
  t.add({std::string("terms"), static_cast<double>(rep.term_count)});
  t.add({std::string("clifford_checkable"), std::string(rep.checkable ? "true" : "false")});
  t.add({std::string("clifford_pass"), std::string(rep.pass ? "true" : "false")});
  for (const auto& c : rep.caveats) t.add({std::string("caveat"), c});
  if (spec.translation_invariant()) {
    if (spec.basis != BasisKind::custom) {
      const auto ucg = unit_cell_from_spec(spec);
      t.add({std::string("cell_classes"), static_cast<double>(ucg.size())});
      t.add({std::string("cell_edges"), static_cast<double>(ucg.edges().size())});
    }
  } else {
    const auto g = build_graph(spec);
    t.add({std::string("vertices"), static_cast<double>(g.vertex_count())});
    t.add({std::string("edges"), static_cast<double>(g.edge_count())});
    t.add({std::string("max_degree"), static_cast<double>(g.max_degree())});
    t.add({std::string("max_edge_weight"), g.max_edge_weight()});
    t.add({std::string("generic_velocity"), g.edge_count() ? generic_velocity(g) : 0.0});
  }
  return t;
}

}  // namespace lrb
