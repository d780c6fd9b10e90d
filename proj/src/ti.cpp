// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/ti.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "lrbound/error.hpp"

namespace lrb {

const char* to_string(VelocityMethod m) {
  switch (m) {
    case VelocityMethod::graph: return "graph";
    case VelocityMethod::fermion: return "fermion";
    case VelocityMethod::reduced: return "reduced";
    case VelocityMethod::closed_form: return "closed-form";
    case VelocityMethod::generic: return "generic";
  }
  return "unknown";
}

namespace {

bool lex_negative(const Coord& c) {
  for (int v : c) {
    if (v < 0) return true;
    if (v > 0) return false;
  }
  return false;
}

bool is_zero(const Coord& c) {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

Coord negate(Coord c) {
  for (auto& v : c) v = -v;
  return c;
}

Coord add(const Coord& a, const Coord& b) {
  Coord out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Coord sub(const Coord& a, const Coord& b) {
  Coord out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

using EdgeKey = std::tuple<std::size_t, std::size_t, Coord>;

// Orders (alpha, beta, offset) so that alpha <= beta and, for alpha == beta,
// offset is lexicographically positive. Returns nullopt for self-loops.
std::optional<EdgeKey> canonical(std::size_t a, std::size_t b, Coord off) {
  if (a > b) {
    std::swap(a, b);
    off = negate(std::move(off));
  } else if (a == b) {
    if (is_zero(off)) return std::nullopt;
    if (lex_negative(off)) off = negate(std::move(off));
  }
  return EdgeKey{a, b, std::move(off)};
}

std::vector<Coord> body_cells(const TermBody& body) {
  std::vector<Coord> cells;
  if (const auto* p = std::get_if<PauliString>(&body)) {
    for (const auto& [site, _] : p->factors()) cells.push_back(site.cell);
  } else {
    for (const auto& m : std::get<MajoranaMonomial>(body).modes()) cells.push_back(m.cell);
  }
  return cells;
}

TermBody translate(const TermBody& body, const Coord& off) {
  if (const auto* p = std::get_if<PauliString>(&body)) return p->translated(off);
  return std::get<MajoranaMonomial>(body).translated(off);
}

// Calls f(c) for every c in the box lo <= c <= hi.
template <class F>
void for_each_in_box(const Coord& lo, const Coord& hi, F&& f) {
  const std::size_t d = lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return;
  Coord c = lo;
  while (true) {
    f(c);
    std::size_t ax = d;
    while (ax > 0 && c[ax - 1] == hi[ax - 1]) {
      c[ax - 1] = lo[ax - 1];
      --ax;
    }
    if (ax == 0) return;
    ++c[ax - 1];
  }
}

std::size_t linear_cell(const std::vector<int>& extents, const Coord& cell) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < extents.size(); ++i) idx = idx * static_cast<std::size_t>(extents[i]) + cell[i];
  return idx;
}

bool in_lattice(const std::vector<int>& extents, const Coord& cell) {
  for (std::size_t i = 0; i < extents.size(); ++i)
    if (cell[i] < 0 || cell[i] >= extents[i]) return false;
  return true;
}

std::size_t cell_count(const std::vector<int>& extents) {
  std::size_t n = 1;
  for (int e : extents) {
    if (e <= 0) throw std::invalid_argument("lattice extents must be positive");
    n *= static_cast<std::size_t>(e);
  }
  return n;
}

Coord cell_of(const std::vector<int>& extents, std::size_t linear) {
  Coord c(extents.size());
  for (std::size_t i = extents.size(); i-- > 0;) {
    c[i] = static_cast<int>(linear % static_cast<std::size_t>(extents[i]));
    linear /= static_cast<std::size_t>(extents[i]);
  }
  return c;
}

std::string coord_string(const Coord& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

UnitCellGraph::UnitCellGraph(int dimension, std::vector<CellVertex> vertices, std::vector<CellEdge> edges,
                             VelocityMethod origin)
    : dimension_(dimension), kind_(Kind::commutativity), origin_(origin), symmetric_(true),
      vertices_(std::move(vertices)) {
  if (dimension_ < 1) throw std::invalid_argument("unit cell: dimension must be >= 1");
  for (const auto& v : vertices_)
    if (!(v.weight > 0.0) || !std::isfinite(v.weight))
      throw std::invalid_argument("unit cell: vertex '" + v.label + "' has nonpositive weight");
  std::set<EdgeKey> seen;
  for (auto& e : edges) {
    if (e.alpha >= vertices_.size() || e.beta >= vertices_.size())
      throw std::invalid_argument("unit cell: edge endpoint out of range");
    if (e.offset.size() != static_cast<std::size_t>(dimension_))
      throw std::invalid_argument("unit cell: edge offset has wrong dimension");
    auto key = canonical(e.alpha, e.beta, e.offset);
    if (!key) throw std::invalid_argument("unit cell: self-loop on '" + vertices_[e.alpha].label + "'");
    seen.insert(*key);
  }
  for (const auto& [a, b, off] : seen) {
    edges_.push_back({a, b, off});
    const double w = 2.0 * std::sqrt(vertices_[a].weight * vertices_[b].weight);
    couplings_.push_back({a, b, off, w});
    couplings_.push_back({b, a, negate(off), w});
  }
}

UnitCellGraph UnitCellGraph::coefficient(int dimension, std::vector<std::string> labels,
                                         std::vector<CellCoupling> couplings, VelocityMethod origin) {
  if (dimension < 1) throw std::invalid_argument("unit cell: dimension must be >= 1");
  UnitCellGraph g;
  g.dimension_ = dimension;
  g.kind_ = Kind::coefficient;
  g.origin_ = origin;
  for (auto& l : labels) g.vertices_.push_back({std::move(l), 1.0, std::nullopt});
  std::map<EdgeKey, double> sum;
  for (auto& c : couplings) {
    if (c.from >= g.size() || c.to >= g.size()) throw std::invalid_argument("unit cell: coupling index out of range");
    if (c.offset.size() != static_cast<std::size_t>(dimension))
      throw std::invalid_argument("unit cell: coupling offset has wrong dimension");
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight))
      throw std::invalid_argument("unit cell: coupling weights must be finite and nonnegative");
    if (c.weight > 0.0) sum[{c.from, c.to, c.offset}] += c.weight;
  }
  for (const auto& [key, w] : sum) {
    const auto& [a, b, off] = key;
    g.couplings_.push_back({a, b, off, w});
  }
  g.symmetric_ = true;
  for (const auto& [key, w] : sum) {
    const auto& [a, b, off] = key;
    auto it = sum.find({b, a, negate(off)});
    if (it == sum.end() || std::abs(it->second - w) > 1e-14 * std::max(1.0, w)) {
      g.symmetric_ = false;
      break;
    }
  }
  return g;
}

std::optional<std::size_t> UnitCellGraph::find(std::string_view label) const {
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    if (vertices_[a].label == label) return a;
  return std::nullopt;
}

UnitCellGraph unit_cell_from_spec(const HamiltonianSpec& spec) {
  if (!spec.translation_invariant())
    throw std::invalid_argument("unit_cell_from_spec: spec is not translation-invariant");
  if (spec.basis == BasisKind::custom) throw std::invalid_argument("unit_cell_from_spec: custom basis has no unit cell");
  const std::size_t d = static_cast<std::size_t>(spec.dimension);

  std::vector<CellVertex> verts;
  std::vector<Coord> lo, hi;
  for (const auto& t : spec.terms) {
    if (t.magnitude() == 0.0) continue;
    const auto cells = body_cells(t.body);
    if (cells.empty()) continue;  // identity commutes with everything
    Coord mn(d, 0), mx(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      mn[i] = mx[i] = cells.front()[i];
      for (const auto& c : cells) {
        mn[i] = std::min(mn[i], c[i]);
        mx[i] = std::max(mx[i], c[i]);
      }
    }
    verts.push_back({t.label, t.magnitude(), t.body});
    lo.push_back(mn);
    hi.push_back(mx);
  }
  if (verts.empty()) throw std::invalid_argument("unit_cell_from_spec: no nonzero terms");

  std::vector<CellEdge> edges;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a; b < verts.size(); ++b) {
      // beta translated by delta overlaps alpha only inside this box
      Coord dlo(d), dhi(d);
      for (std::size_t i = 0; i < d; ++i) {
        dlo[i] = lo[a][i] - hi[b][i];
        dhi[i] = hi[a][i] - lo[b][i];
      }
      for_each_in_box(dlo, dhi, [&](const Coord& off) {
        if (a == b && (is_zero(off) || lex_negative(off))) return;
        if (!commutes(*verts[a].body, translate(*verts[b].body, off))) edges.push_back({a, b, off});
      });
    }
  }
  return UnitCellGraph(spec.dimension, std::move(verts), std::move(edges), VelocityMethod::graph);
}

UnitCellGraph fermion_cell_from_spec(const HamiltonianSpec& spec) {
  if (!spec.translation_invariant())
    throw std::invalid_argument("fermion_cell_from_spec: spec is not translation-invariant");
  if (spec.basis != BasisKind::majorana) throw std::invalid_argument("fermion_cell_from_spec: basis must be majorana");

  std::set<int> flavors;
  for (const auto& t : spec.terms)
    for (const auto& m : std::get<MajoranaMonomial>(t.body).modes()) flavors.insert(m.flavor);
  if (flavors.empty()) throw std::invalid_argument("fermion_cell_from_spec: no Majorana modes");
  std::map<int, std::size_t> index;
  std::vector<std::string> labels;
  for (int f : flavors) {
    index[f] = labels.size();
    labels.push_back("c#" + std::to_string(f));
  }

  std::vector<CellCoupling> couplings;
  for (const auto& t : spec.terms) {
    const auto& modes = std::get<MajoranaMonomial>(t.body).modes();
    if (t.magnitude() == 0.0 || modes.empty()) continue;
    if (modes.size() % 2 != 0)
      throw std::invalid_argument("fermion_cell_from_spec: term '" + t.label + "' has odd Majorana degree");
    const double w = 2.0 * t.magnitude();
    for (const auto& m : modes)
      for (const auto& other : modes)
        if (&m != &other) couplings.push_back({index[m.flavor], index[other.flavor], sub(other.cell, m.cell), w});
  }
  return UnitCellGraph::coefficient(spec.dimension, std::move(labels), std::move(couplings), VelocityMethod::fermion);
}

UnitCellGraph reduce_unit_cell(const UnitCellGraph& ucg, const std::vector<std::size_t>& eliminated) {
  if (ucg.kind() != UnitCellGraph::Kind::commutativity)
    throw std::invalid_argument("reduce_unit_cell: only commutativity cells can be reduced");
  std::vector<bool> gone(ucg.size(), false);
  for (auto a : eliminated) {
    if (a >= ucg.size()) throw std::invalid_argument("reduce_unit_cell: class index out of range");
    gone[a] = true;
  }
  for (const auto& e : ucg.edges())
    if (gone[e.alpha] && gone[e.beta])
      throw std::invalid_argument("reduce_unit_cell: eliminated classes '" + ucg.vertex(e.alpha).label + "' and '" +
                                  ucg.vertex(e.beta).label + "' are adjacent");

  std::vector<std::size_t> remap(ucg.size(), 0);
  std::vector<CellVertex> verts;
  for (std::size_t a = 0; a < ucg.size(); ++a) {
    if (gone[a]) continue;
    remap[a] = verts.size();
    verts.push_back(ucg.vertex(a));
  }
  if (verts.empty()) throw std::invalid_argument("reduce_unit_cell: every class eliminated");

  std::vector<CellEdge> edges;
  for (const auto& e : ucg.edges())
    if (!gone[e.alpha] && !gone[e.beta]) edges.push_back({remap[e.alpha], remap[e.beta], e.offset});

  // Neighbors of each eliminated class as (class, offset) relative to its home cell
  std::vector<std::vector<std::pair<std::size_t, Coord>>> nbr(ucg.size());
  for (const auto& c : ucg.couplings())
    if (gone[c.from]) nbr[c.from].push_back({c.to, c.offset});
  for (auto l : eliminated) {
    const auto& list = nbr[l];
    for (std::size_t p = 0; p < list.size(); ++p)
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        const auto& [b1, d1] = list[p];
        const auto& [b2, d2] = list[q];
        if (b1 == b2 && d1 == d2) continue;
        edges.push_back({remap[b1], remap[b2], sub(d2, d1)});
      }
  }
  // UnitCellGraph canonicalizes and deduplicates; same-cell self-loops cannot
  // arise because distinct physical vertices have distinct (class, offset).
  return UnitCellGraph(ucg.dimension(), std::move(verts), std::move(edges), VelocityMethod::reduced);
}

std::size_t cell_vertex_index(const UnitCellGraph& ucg, const std::vector<int>& extents, const Coord& cell,
                              std::size_t alpha) {
  if (extents.size() != static_cast<std::size_t>(ucg.dimension()) || cell.size() != extents.size())
    throw std::invalid_argument("cell_vertex_index: dimension mismatch");
  if (!in_lattice(extents, cell) || alpha >= ucg.size())
    throw std::out_of_range("cell_vertex_index: cell or class out of range");
  return linear_cell(extents, cell) * ucg.size() + alpha;
}

CommutativityGraph expand_unit_cell(const UnitCellGraph& ucg, const std::vector<int>& extents) {
  if (ucg.kind() != UnitCellGraph::Kind::commutativity)
    throw std::invalid_argument("expand_unit_cell: coefficient cells expand through expand_couplings");
  if (extents.size() != static_cast<std::size_t>(ucg.dimension()))
    throw std::invalid_argument("expand_unit_cell: extents dimension mismatch");
  const std::size_t cells = cell_count(extents);
  const std::size_t l = ucg.size();
  std::vector<VertexInfo> verts;
  verts.reserve(cells * l);
  for (std::size_t c = 0; c < cells; ++c) {
    const Coord cell = cell_of(extents, c);
    for (std::size_t a = 0; a < l; ++a) {
      const auto& v = ucg.vertex(a);
      VertexInfo info{v.label + "@" + coord_string(cell), v.weight, std::nullopt, cell, a};
      if (v.body) info.body = translate(*v.body, cell);
      verts.push_back(std::move(info));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t c = 0; c < cells; ++c) {
    const Coord cell = cell_of(extents, c);
    for (const auto& e : ucg.edges()) {
      const Coord other = add(cell, e.offset);
      if (!in_lattice(extents, other)) continue;
      edges.emplace_back(c * l + e.alpha, linear_cell(extents, other) * l + e.beta);
    }
  }
  return CommutativityGraph(std::move(verts), std::move(edges));
}

CouplingMatrix expand_couplings(const UnitCellGraph& ucg, const std::vector<int>& extents) {
  if (extents.size() != static_cast<std::size_t>(ucg.dimension()))
    throw std::invalid_argument("expand_couplings: extents dimension mismatch");
  const std::size_t cells = cell_count(extents);
  const std::size_t l = ucg.size();
  std::vector<CouplingMatrix::Entry> entries;
  for (std::size_t c = 0; c < cells; ++c) {
    const Coord cell = cell_of(extents, c);
    for (const auto& cp : ucg.couplings()) {
      const Coord other = add(cell, cp.offset);
      if (!in_lattice(extents, other)) continue;
      entries.push_back({c * l + cp.from, linear_cell(extents, other) * l + cp.to, cp.weight});
    }
  }
  return CouplingMatrix(cells * l, std::move(entries));
}

Eigen::MatrixXcd build_hk(const UnitCellGraph& ucg, std::span<const std::complex<double>> k) {
  if (k.size() != static_cast<std::size_t>(ucg.dimension())) throw std::invalid_argument("build_hk: k has wrong dimension");
  const auto l = static_cast<Eigen::Index>(ucg.size());
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(l, l);
  for (const auto& c : ucg.couplings()) {
    std::complex<double> phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * static_cast<double>(c.offset[i]);
    H(static_cast<Eigen::Index>(c.from), static_cast<Eigen::Index>(c.to)) +=
        c.weight * std::exp(std::complex<double>(0.0, 1.0) * phase);
  }
  return H;
}

Eigen::MatrixXd build_h_imag(const UnitCellGraph& ucg, std::span<const double> kappa) {
  if (kappa.size() != static_cast<std::size_t>(ucg.dimension()))
    throw std::invalid_argument("build_h_imag: kappa has wrong dimension");
  const auto l = static_cast<Eigen::Index>(ucg.size());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(l, l);
  for (const auto& c : ucg.couplings()) {
    double ex = 0.0;
    for (std::size_t i = 0; i < kappa.size(); ++i) ex += kappa[i] * c.offset[i];
    H(static_cast<Eigen::Index>(c.from), static_cast<Eigen::Index>(c.to)) += c.weight * std::exp(ex);
  }
  return H;
}

double perron_root(const Eigen::MatrixXd& A) {
  const auto n = A.rows();
  if (n == 0) return 0.0;
  if (A.cols() != n) throw std::invalid_argument("perron_root: matrix must be square");
  if ((A.array() < 0.0).any()) throw std::invalid_argument("perron_root: matrix must be nonnegative");
  const double scale = A.cwiseAbs().rowwise().sum().maxCoeff();
  if (scale == 0.0) return 0.0;
  if (!std::isfinite(scale)) throw NumericError("perron_root: non-finite matrix entries");

  auto dense = [&] {
    // Diagonal similarity balancing; H(i kappa) mixes e^{+kappa} and e^{-kappa}
    // entries and the unbalanced QR iteration loses the Perron root.
    Eigen::MatrixXd B = A;
    for (int sweep = 0; sweep < 100; ++sweep) {
      bool changed = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double c = B.col(i).sum() - B(i, i);
        const double r = B.row(i).sum() - B(i, i);
        if (c == 0.0 || r == 0.0) continue;
        const double f = std::sqrt(c / r);
        if (std::abs(f - 1.0) < 1e-3) continue;
        B.row(i) *= f;
        B.col(i) /= f;
        changed = true;
      }
      if (!changed) break;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(B, false);
    if (es.info() != Eigen::Success) throw NumericError("perron_root: eigenvalue solver failed");
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) best = std::max(best, es.eigenvalues()[i].real());
    return best;
  };
  if (n <= 8) return dense();

  // Power iteration on A + s I (aperiodic); Collatz-Wielandt ratios bracket
  // the Perron root of the shifted matrix.
  const double s = scale;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / static_cast<double>(n);
  for (int it = 0; it < 200000; ++it) {
    Eigen::VectorXd y = A * x + s * x;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= 1e-14 * hi) return std::max(0.0, 0.5 * (lo + hi) - s);
    x = y / y.sum();
    if ((x.array() < 1e-250).any()) break;  // reducible: components decay away
  }
  return dense();
}

DispersionSample omega_max(const UnitCellGraph& ucg, std::span<const double> kappa) {
  return {std::vector<double>(kappa.begin(), kappa.end()), perron_root(build_h_imag(ucg, kappa))};
}

VelocityResult lr_velocity(const UnitCellGraph& ucg, const VelocityOptions& opt) {
  VelocityResult res;
  res.method = ucg.origin();
  const std::size_t d = static_cast<std::size_t>(ucg.dimension());
  const bool hops = std::any_of(ucg.couplings().begin(), ucg.couplings().end(),
                                [](const CellCoupling& c) { return !is_zero(c.offset); });
  if (!hops) {
    res.value = 0.0;
    res.branch = "no inter-cell couplings";
    res.branches.push_back({res.branch, 0.0, true});
    res.notes = "operators do not spread";
    return res;
  }

  double best = -1.0;
  std::vector<double> kap(d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<double> sgn(d);
    for (std::size_t i = 0; i < d; ++i) sgn[i] = (mask >> i) & 1 ? -1.0 : 1.0;
    auto f = [&](double k0) {
      for (std::size_t i = 0; i < d; ++i) kap[i] = sgn[i] * k0;
      return perron_root(build_h_imag(ucg, kap)) / k0;
    };
    const auto m = minimize_scan_golden(f, opt.scan);
    if (!m.interior)
      throw NumericError("lr_velocity: omega(i kappa)/kappa has no interior minimum on [" +
                         format_real(opt.scan.lo) + ", " + format_real(opt.scan.hi) + "] (minimum at kappa = " +
                         format_real(m.x) + ")");
    if (m.value > best) {
      best = m.value;
      res.kappa_star = m.x;
      res.omega_at_kappa = m.value * m.x;
    }
  }
  res.value = best;
  res.branch = std::string(to_string(ucg.origin())) + " dispersion";
  res.branches.push_back({res.branch, best, true});
  return res;
}

namespace {

// Trapezoidal sum over an n^d uniform k grid for all requested times.
std::vector<std::complex<double>> fourier_sum(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha,
                                              std::size_t beta, std::span<const double> times, std::size_t n) {
  const std::size_t d = static_cast<std::size_t>(ucg.dimension());
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= n;
  std::vector<std::complex<double>> acc(times.size(), 0.0);
  std::vector<std::complex<double>> k(d);
  const auto a = static_cast<Eigen::Index>(alpha), b = static_cast<Eigen::Index>(beta);
  const bool herm = ucg.hermitian();
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rem = p;
    double kr = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double ki = 2.0 * std::numbers::pi * static_cast<double>(rem % n) / static_cast<double>(n) - std::numbers::pi;
      rem /= n;
      k[i] = ki;
      kr += ki * r[i];
    }
    const auto Hk = build_hk(ucg, k);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -kr));
    if (herm) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hk);
      const auto& V = es.eigenvectors();
      const auto& lam = es.eigenvalues();
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        std::complex<double> s = 0.0;
        for (Eigen::Index m = 0; m < lam.size(); ++m) s += V(a, m) * std::exp(lam[m] * times[ti]) * std::conj(V(b, m));
        acc[ti] += s * phase;
      }
    } else {
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        Eigen::MatrixXcd E = (Hk * times[ti]).exp();
        acc[ti] += E(a, b) * phase;
      }
    }
  }
  for (auto& v : acc) v /= static_cast<double>(total);
  return acc;
}

}  // namespace

FourierGreen fourier_green(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta,
                           std::span<const double> times, const FourierOptions& opt) {
  if (r.size() != static_cast<std::size_t>(ucg.dimension()))
    throw std::invalid_argument("fourier_green: r has wrong dimension");
  if (alpha >= ucg.size() || beta >= ucg.size()) throw std::invalid_argument("fourier_green: class out of range");
  if (opt.quadrature < 16 || opt.quadrature % 2 != 0)
    throw std::invalid_argument("fourier_green: quadrature must be even and >= 16");
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("fourier_green: times must be finite and >= 0");

  const std::size_t d = static_cast<std::size_t>(ucg.dimension());
  const double max_points = 1 << 22;
  auto check_real = [&](const std::vector<std::complex<double>>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::abs(v[i].imag()) > 1e-9 * std::max(1.0, std::abs(v[i].real())))
        throw NumericError("fourier_green: integral has a non-negligible imaginary part");
      out[i] = v[i].real();
    }
    return out;
  };

  FourierGreen res{r, alpha, beta, std::vector<double>(times.begin(), times.end()), {}, opt.quadrature, 0.0};
  std::size_t n = opt.quadrature;
  auto coarse = fourier_sum(ucg, r, alpha, beta, times, n);
  if (!opt.check_doubling) {
    res.values = check_real(coarse);
    return res;
  }
  while (true) {
    if (std::pow(static_cast<double>(2 * n), static_cast<double>(d)) > max_points)
      throw NumericError("fourier_green: quadrature did not converge before " + std::to_string(n) + " points per axis");
    auto fine = fourier_sum(ucg, r, alpha, beta, times, 2 * n);
    double delta = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const double diff = std::abs(fine[i] - coarse[i]);
      delta = std::max(delta, diff);
      if (diff > opt.doubling_tol * std::max(1.0, std::abs(fine[i]))) ok = false;
    }
    n *= 2;
    if (ok) {
      res.values = check_real(fine);
      res.quadrature = n;
      res.doubling_delta = delta;
      return res;
    }
    coarse = std::move(fine);
  }
}

namespace {

// log [e^A]_{alpha beta} for entrywise-nonnegative A. Taylor series on A/2^s
// followed by s squarings, renormalizing by the max entry after each step so
// that nothing overflows.
double log_expm_entry(const Eigen::MatrixXd& A, std::size_t alpha, std::size_t beta) {
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd B = A / std::ldexp(1.0, s);
  const auto n = A.rows();
  Eigen::MatrixXd E = Eigen::MatrixXd::Identity(n, n), term = E;
  for (int k = 1; k < 60; ++k) {
    term = term * B / static_cast<double>(k);
    E += term;
    if (term.maxCoeff() <= 1e-18 * E.maxCoeff()) break;
  }
  double log_scale = 0.0;
  for (int k = 0; k < s; ++k) {
    E = E * E;
    const double m = E.maxCoeff();
    E /= m;
    log_scale = 2.0 * log_scale + std::log(m);
  }
  // After s squarings the accumulated factor is exp(log_scale).
  return std::log(E(static_cast<Eigen::Index>(alpha), static_cast<Eigen::Index>(beta))) + log_scale;
}

double log_tail_bound(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta, double t,
                      std::span<const double> kappa) {
  if (r.size() != kappa.size()) throw std::invalid_argument("tail_bound: r and kappa dimensions differ");
  if (alpha >= ucg.size() || beta >= ucg.size()) throw std::invalid_argument("tail_bound: class out of range");
  if (!(t >= 0.0)) throw std::invalid_argument("tail_bound: t must be >= 0");
  double kr = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) kr += kappa[i] * r[i];
  return log_expm_entry(build_h_imag(ucg, kappa) * t, alpha, beta) - kr;
}

}  // namespace

double tail_bound(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta, double t,
                  std::span<const double> kappa) {
  return std::exp(log_tail_bound(ucg, r, alpha, beta, t, kappa));
}

double tail_bound_optimized(const UnitCellGraph& ucg, const Coord& r, std::size_t alpha, std::size_t beta, double t,
                            const ScanOptions& scan) {
  const std::size_t d = r.size();
  std::vector<double> kap(d, 0.0);
  if (is_zero(r)) return tail_bound(ucg, r, alpha, beta, t, kap);
  auto f = [&](double k0) {
    for (std::size_t i = 0; i < d; ++i) kap[i] = r[i] > 0 ? k0 : (r[i] < 0 ? -k0 : 0.0);
    return log_tail_bound(ucg, r, alpha, beta, t, kap);
  };
  const auto m = minimize_scan_golden(f, scan);
  return std::exp(m.value);
}

}  // namespace lrb
