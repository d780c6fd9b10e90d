// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors
//
// lrbound command-line front end. All numerics go through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrbound/lrbound.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
  int line = 0;
};

void check(lrb_status s) {
  if (s != LRB_OK) throw Failure{s, lrb_last_error(), lrb_last_error_line()};
}

[[noreturn]] void usage(const std::string& msg) { throw Failure{kExitUsage, msg}; }

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Spec = std::unique_ptr<lrb_spec, Deleter<lrb_spec, lrb_spec_free>>;
using Graph = std::unique_ptr<lrb_graph, Deleter<lrb_graph, lrb_graph_free>>;
using Cell = std::unique_ptr<lrb_cell, Deleter<lrb_cell, lrb_cell_free>>;
using Table = std::unique_ptr<lrb_table, Deleter<lrb_table, lrb_table_free>>;

struct Options {
  std::string builtin, spec, params, times = "0:1:11", out, format = "csv";
  std::size_t quad = 0;
  double tol = 0.0;
  std::string lattice, boundary = "open", eliminate;
  bool engine = false, fermion = false;
  std::vector<std::string> sources, targets, X, Y;
  std::string A, B, mode = "operator";
  double normA = 1.0, normB = 1.0;
  std::string r, alpha, beta, kappa = "0.1:5:50", range;
  std::optional<double> gap;
};

struct Range {
  double lo = 0.0, hi = 0.0;
  std::size_t n = 0;
};

Range parse_range(const std::string& text, const char* what) {
  Range r;
  char tail = 0;
  long long n = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lld%c", &r.lo, &r.hi, &n, &tail) != 3 || n < 1)
    usage(std::string(what) + " must be a:b:n with n >= 1");
  r.n = static_cast<std::size_t>(n);
  return r;
}

std::vector<double> grid(const std::string& text, const char* what) {
  const auto r = parse_range(text, what);
  std::vector<double> v(r.n);
  for (std::size_t k = 0; k < r.n; ++k)
    v[k] = r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * static_cast<double>(k) / static_cast<double>(r.n - 1);
  return v;
}

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    try {
      v.push_back(std::stoi(item, &pos));
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) usage(std::string(what) + ": bad integer '" + item + "'");
  }
  if (v.empty()) usage(std::string(what) + " must not be empty");
  return v;
}

std::string render(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

class Emitter {
 public:
  Emitter(const std::string& subcommand, const Options& o, std::map<std::string, std::string> opts)
      : sub_(subcommand), opt_(o), opts_(std::move(opts)) {}

  void extra(const std::string& key, double v) { extra_[key] = v; }

  void write(const lrb_table* t) const {
    std::ostringstream os;
    const std::size_t rows = lrb_table_rows(t), cols = lrb_table_cols(t);
    if (opt_.format == "csv") {
      for (std::size_t c = 0; c < cols; ++c) os << (c ? "," : "") << csv_field(lrb_table_column(t, c));
      os << '\n';
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (c) os << ',';
          os << (lrb_table_is_number(t, r, c) ? render(lrb_table_number(t, r, c)) : csv_field(lrb_table_text(t, r, c)));
        }
        os << '\n';
      }
    } else {
      json doc;
      doc["meta"]["version"] = lrb_version();
      doc["meta"]["subcommand"] = sub_;
      doc["meta"]["options"] = json::object();
      for (const auto& [k, v] : opts_) doc["meta"]["options"][k] = v;
      for (const auto& [k, v] : extra_) doc["meta"][k] = number(v);
      doc["rows"] = json::array();
      for (std::size_t r = 0; r < rows; ++r) {
        json row = json::object();
        for (std::size_t c = 0; c < cols; ++c)
          row[lrb_table_column(t, c)] =
              lrb_table_is_number(t, r, c) ? number(lrb_table_number(t, r, c)) : json(lrb_table_text(t, r, c));
        doc["rows"].push_back(std::move(row));
      }
      os << doc.dump(2) << '\n';
    }
    if (opt_.out.empty()) {
      std::cout << os.str();
      std::cout.flush();
    } else {
      std::ofstream f(opt_.out, std::ios::binary);
      f << os.str();
      if (!f) throw Failure{kExitUsage, "cannot write '" + opt_.out + "'"};
    }
  }

 private:
  static json number(double x) { return std::isfinite(x) ? json(x) : json(render(x)); }

  std::string sub_;
  const Options& opt_;
  std::map<std::string, std::string> opts_;
  std::map<std::string, double> extra_;
};

Spec load_model(const Options& o, bool with_lattice) {
  if (o.builtin.empty() == o.spec.empty()) usage("exactly one of --builtin or --spec is required");
  lrb_spec* s = nullptr;
  if (!o.spec.empty()) {
    if (!o.params.empty()) usage("-p applies to --builtin models only");
    check(lrb_spec_load(o.spec.c_str(), &s));
  } else {
    const bool finite = with_lattice && !o.lattice.empty();
    check(lrb_spec_builtin(o.builtin.c_str(), o.params.c_str(), finite ? o.lattice.c_str() : nullptr,
                           finite ? o.boundary.c_str() : nullptr, &s));
  }
  return Spec(s);
}

bool translation_invariant(const lrb_spec* s) {
  int ti = 0;
  check(lrb_spec_translation_invariant(s, &ti));
  return ti != 0;
}

Cell make_cell(const Options& o, const lrb_spec* s) {
  lrb_cell* c = nullptr;
  check(lrb_cell_from_spec(s, o.fermion ? 1 : 0, &c));
  Cell cell(c);
  if (!o.eliminate.empty()) {
    lrb_cell* red = nullptr;
    check(lrb_cell_reduce(cell.get(), o.eliminate.c_str(), &red));
    cell.reset(red);
  }
  return cell;
}

Graph make_graph(const Options& o, const lrb_spec* s) {
  lrb_graph* g = nullptr;
  check(lrb_graph_build(s, &g));
  Graph graph(g);
  if (!o.eliminate.empty()) {
    lrb_graph* red = nullptr;
    check(lrb_graph_reduce_classes(graph.get(), o.eliminate.c_str(), &red));
    graph.reset(red);
  }
  return graph;
}

std::vector<size_t> find_all(const lrb_graph* g, const std::vector<std::string>& labels) {
  std::vector<size_t> ids;
  for (const auto& l : labels) {
    size_t id = 0;
    check(lrb_graph_find(g, l.c_str(), &id));
    ids.push_back(id);
  }
  return ids;
}

std::vector<size_t> support(const lrb_graph* g, const lrb_spec* s, const std::string& factors) {
  size_t n = 0;
  check(lrb_graph_support(g, s, factors.c_str(), nullptr, 0, &n));
  std::vector<size_t> ids(n);
  check(lrb_graph_support(g, s, factors.c_str(), ids.data(), n, &n));
  return ids;
}

size_t cell_class(const lrb_cell* c, const std::string& label, const char* what) {
  if (label.empty()) usage(std::string(what) + " is required");
  size_t a = 0;
  check(lrb_cell_find(c, label.c_str(), &a));
  return a;
}

Table run_velocity(const Options& o) {
  lrb_table* t = nullptr;
  const bool closed = !o.builtin.empty() && !o.engine && !o.fermion && o.eliminate.empty() && o.lattice.empty();
  if (closed) {
    check(lrb_model_velocity(o.builtin.c_str(), o.params.c_str(), &t));
    return Table(t);
  }
  const auto s = load_model(o, true);
  if (translation_invariant(s.get())) {
    const auto c = make_cell(o, s.get());
    check(lrb_cell_velocity(c.get(), &t));
    return Table(t);
  }
  if (o.fermion) usage("--fermion needs a translation-invariant model");
  const auto g = make_graph(o, s.get());
  check(lrb_graph_velocity(g.get(), &t));
  return Table(t);
}

Table run_green(const Options& o) {
  const auto times = grid(o.times, "--times");
  const auto s = load_model(o, true);
  lrb_table* t = nullptr;
  if (translation_invariant(s.get())) {
    const auto c = make_cell(o, s.get());
    int d = 0;
    check(lrb_cell_dimension(c.get(), &d));
    const auto r = o.r.empty() ? std::vector<int>(static_cast<std::size_t>(d), 0) : int_list(o.r, "--r");
    if (r.size() != static_cast<std::size_t>(d)) usage("--r needs one offset per lattice dimension");
    check(lrb_cell_fourier_green(c.get(), r.data(), cell_class(c.get(), o.alpha, "--alpha"),
                                 cell_class(c.get(), o.beta, "--beta"), times.data(), times.size(), o.quad, &t));
    return Table(t);
  }
  const auto g = make_graph(o, s.get());
  if (o.sources.empty()) usage("--source is required on a finite lattice");
  const auto src = find_all(g.get(), o.sources);
  std::vector<size_t> tgt;
  if (o.targets.empty()) {
    size_t n = 0;
    check(lrb_graph_vertex_count(g.get(), &n));
    for (size_t i = 0; i < n; ++i) tgt.push_back(i);
  } else {
    tgt = find_all(g.get(), o.targets);
  }
  check(lrb_green(g.get(), src.data(), src.size(), tgt.data(), tgt.size(), times.data(), times.size(), o.tol, &t));
  return Table(t);
}

Table run_bound(const Options& o) {
  const auto times = grid(o.times, "--times");
  const auto s = load_model(o, true);
  if (translation_invariant(s.get())) usage("bound needs a finite lattice: pass --spec or --builtin with --lattice");
  const auto g = make_graph(o, s.get());
  if (!o.X.empty() && !o.A.empty()) usage("give either --X or --A");
  if (!o.Y.empty() && !o.B.empty()) usage("give either --Y or --B");
  const auto X = !o.A.empty() ? support(g.get(), s.get(), o.A) : find_all(g.get(), o.X);
  const auto Y = !o.B.empty() ? support(g.get(), s.get(), o.B) : find_all(g.get(), o.Y);
  lrb_table* t = nullptr;
  check(lrb_operator_bound(g.get(), o.mode.c_str(), X.data(), X.size(), Y.data(), Y.size(), o.normA, o.normB,
                           times.data(), times.size(), o.tol, &t));
  return Table(t);
}

Table run_dispersion(const Options& o) {
  const auto k = grid(o.kappa, "--kappa");
  const auto s = load_model(o, false);
  if (!translation_invariant(s.get())) usage("dispersion needs a translation-invariant model");
  const auto c = make_cell(o, s.get());
  lrb_table* t = nullptr;
  check(lrb_cell_dispersion(c.get(), k.data(), k.size(), &t));
  return Table(t);
}

double param_j(const std::string& params) {
  if (params.empty()) return 1.0;
  double J = 0.0;
  char tail = 0;
  if (std::sscanf(params.c_str(), "J=%lf%c", &J, &tail) != 1) usage("xi accepts only -p J=<value>");
  return J;
}

int run(int argc, char** argv) {
  CLI::App app{"Lieb-Robinson bounds on commutativity graphs"};
  app.set_version_flag("--version", std::string(lrb_version()));
  app.require_subcommand(1);
  Options o;
  std::map<std::string, CLI::App*> subs;

  auto model = [&](CLI::App* s) {
    s->add_option("--builtin", o.builtin, "builtin model id");
    s->add_option("--spec", o.spec, "model spec file");
    s->add_option("-p,--params", o.params, "model parameters k=v[,k=v...]");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "output file (default stdout)");
    s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto lattice = [&](CLI::App* s) {
    s->add_option("--lattice", o.lattice, "finite lattice extents L1,L2,... for --builtin");
    s->add_option("--boundary", o.boundary, "open or periodic")->check(CLI::IsMember({"open", "periodic"}));
    s->add_option("--eliminate", o.eliminate, "comma-separated term classes to eliminate");
  };
  auto numeric = [&](CLI::App* s) {
    s->add_option("--times", o.times, "time grid a:b:n");
    s->add_option("--tol", o.tol, "Green's-function tolerance")->check(CLI::PositiveNumber);
  };

  auto* vel = app.add_subcommand("velocity", "Lieb-Robinson velocity with branch table");
  model(vel), common(vel), lattice(vel);
  vel->add_flag("--engine", o.engine, "use the unit-cell engine instead of the closed form");
  vel->add_flag("--fermion", o.fermion, "fermion-method cell of a Majorana model");

  auto* green = app.add_subcommand("green", "Green's-function curves");
  model(green), common(green), lattice(green), numeric(green);
  green->add_flag("--fermion", o.fermion, "fermion-method cell of a Majorana model");
  green->add_option("--source", o.sources, "source vertex label (repeatable)")->delimiter('\0');
  green->add_option("--target", o.targets, "target vertex label (repeatable)")->delimiter('\0');
  green->add_option("--r", o.r, "cell offset r1,r2,... (translation-invariant models)");
  green->add_option("--alpha", o.alpha, "target vertex class");
  green->add_option("--beta", o.beta, "source vertex class");
  green->add_option("--quad", o.quad, "quadrature points per axis")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "space-time commutator bounds");
  model(bound), common(bound), lattice(bound), numeric(bound);
  bound->add_option("--mode", o.mode, "term, operator or factorial")->check(CLI::IsMember({"term", "operator", "factorial"}));
  bound->add_option("--X", o.X, "support vertex of A (repeatable)")->delimiter('\0');
  bound->add_option("--Y", o.Y, "support vertex of B (repeatable)")->delimiter('\0');
  bound->add_option("--A", o.A, "operator A as a factor list");
  bound->add_option("--B", o.B, "operator B as a factor list");
  bound->add_option("--normA", o.normA, "||A||")->check(CLI::NonNegativeNumber);
  bound->add_option("--normB", o.normB, "||B||")->check(CLI::NonNegativeNumber);

  auto* disp = app.add_subcommand("dispersion", "largest eigenvalue of H(i kappa) along a uniform kappa");
  model(disp), common(disp);
  disp->add_option("--eliminate", o.eliminate, "comma-separated term classes to eliminate");
  disp->add_flag("--fermion", o.fermion, "fermion-method cell of a Majorana model");
  disp->add_option("--kappa", o.kappa, "kappa grid a:b:n");

  auto* xi = app.add_subcommand("xi", "1D TFIM correlation-length bounds");
  common(xi);
  xi->add_option("-p,--params", o.params, "J=<value>");
  xi->add_option("--range", o.range, "h/J grid a:b:n (log spaced)");
  xi->add_option("--gap", o.gap, "fixed gap instead of 2|J-h|")->check(CLI::NonNegativeNumber);

  auto* t1 = app.add_subcommand("table1", "velocity table for TFIM, FH and PTC");
  common(t1);

  auto* f4 = app.add_subcommand("fig4", "1D Fermi-Hubbard velocity versus U/J");
  common(f4);
  f4->add_option("--range", o.range, "U/J grid a:b:n");

  auto* f6 = app.add_subcommand("fig6", "1D TFIM inverse correlation length versus h/J");
  common(f6);
  f6->add_option("--range", o.range, "h/J grid a:b:n (log spaced)");
  f6->add_option("--gap", o.gap, "fixed gap instead of 2|J-h|")->check(CLI::NonNegativeNumber);

  auto* chk = app.add_subcommand("check", "Clifford verification and graph statistics");
  model(chk), common(chk);
  chk->add_option("--lattice", o.lattice, "finite lattice extents L1,L2,... for --builtin");
  chk->add_option("--boundary", o.boundary, "open or periodic")->check(CLI::IsMember({"open", "periodic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw Failure{kExitUsage, e.what()};
  }

  CLI::App* sub = app.get_subcommands().front();
  std::map<std::string, std::string> opts;
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    std::string v;
    for (std::size_t k = 0; k < res.size(); ++k) v += (k ? ";" : "") + res[k];
    opts[opt->get_name(false, true)] = opt->get_type_size() == 0 ? "true" : v;
  }
  Emitter out(sub->get_name(), o, opts);
  const std::string name = sub->get_name();
  Table table;
  lrb_table* t = nullptr;
  if (name == "velocity") {
    table = run_velocity(o);
  } else if (name == "green") {
    table = run_green(o);
  } else if (name == "bound") {
    table = run_bound(o);
  } else if (name == "dispersion") {
    table = run_dispersion(o);
  } else if (name == "xi" || name == "fig6") {
    const auto r = parse_range(o.range.empty() ? "0.01:100:81" : o.range, "--range");
    const double* gap = o.gap ? &*o.gap : nullptr;
    double plateau = 0.0;
    const double J = name == "xi" ? param_j(o.params) : 1.0;
    check(lrb_xi_report(J, r.lo, r.hi, r.n, gap, &t, &plateau));
    table.reset(t);
    out.extra("previous_plateau", plateau);
  } else if (name == "table1") {
    check(lrb_table1(&t));
    table.reset(t);
  } else if (name == "fig4") {
    const auto r = parse_range(o.range.empty() ? "0:80:200" : o.range, "--range");
    check(lrb_fig4(r.lo, r.hi, r.n, &t));
    table.reset(t);
  } else if (name == "check") {
    const auto s = load_model(o, true);
    check(lrb_spec_check(s.get(), &t));
    table.reset(t);
  }
  out.write(table.get());
  return 0;
}

const char* status_name(int code) {
  switch (code) {
    case LRB_ERR_INVALID: return "usage";
    case LRB_ERR_NUMERIC: return "numeric";
    case LRB_ERR_SPEC: return "spec";
    default: return "internal";
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    json err;
    err["error"]["status"] = status_name(f.code);
    err["error"]["code"] = f.code;
    err["error"]["message"] = f.message;
    if (f.line > 0) err["error"]["line"] = f.line;
    std::cerr << err.dump() << '\n';
    return f.code;
  } catch (const std::exception& e) {
    json err;
    err["error"]["status"] = "internal";
    err["error"]["code"] = LRB_ERR_INTERNAL;
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return LRB_ERR_INTERNAL;
  }
}
