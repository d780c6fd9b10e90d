// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lrbound/error.hpp"

namespace lrb {

CouplingMatrix::CouplingMatrix(std::size_t n, std::vector<Entry> entries) : n_(n) {
  for (const auto& e : entries) {
    if (e.row >= n || e.col >= n) throw std::invalid_argument("CouplingMatrix: index out of range");
    if (!(e.value >= 0.0) || !std::isfinite(e.value)) {
      throw std::invalid_argument("CouplingMatrix: entries must be nonnegative and finite");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  row_ptr_.assign(n + 1, 0);
  for (std::size_t k = 0; k < entries.size();) {
    std::size_t m = k;
    double sum = 0.0;
    while (m < entries.size() && entries[m].row == entries[k].row && entries[m].col == entries[k].col) {
      sum += entries[m].value;
      ++m;
    }
    col_.push_back(entries[k].col);
    val_.push_back(sum);
    ++row_ptr_[entries[k].row + 1];
    k = m;
  }
  for (std::size_t i = 0; i < n; ++i) row_ptr_[i + 1] += row_ptr_[i];
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) row += val_[k];
    norm_inf_ = std::max(norm_inf_, row);
  }
}

CouplingMatrix CouplingMatrix::from_graph(const CommutativityGraph& g) {
  std::vector<Entry> entries;
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    for (const auto& nb : g.neighbors(i)) entries.push_back(Entry{i, nb.to, nb.weight});
  }
  return CouplingMatrix(g.vertex_count(), std::move(entries));
}

void CouplingMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) acc += val_[k] * x[col_[k]];
    y[i] = acc;
  }
}

bool CouplingMatrix::symmetric(double tol) const {
  auto lookup = [&](std::size_t r, std::size_t c) {
    const auto first = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
    const auto last = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
    const auto it = std::lower_bound(first, last, c);
    return (it != last && *it == c) ? val_[static_cast<std::size_t>(it - col_.begin())] : 0.0;
  };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const double other = lookup(col_[k], i);
      if (std::abs(other - val_[k]) > tol * std::max(1.0, val_[k])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

GreenEvaluation::GreenEvaluation(std::vector<double> times, VertexSet sources, VertexSet targets, GreenMethod method)
    : times_(std::move(times)),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      method_(method),
      values_(times_.size() * sources_.size() * targets_.size(), 0.0) {}

double& GreenEvaluation::at(std::size_t tp, std::size_t sp, std::size_t k) {
  return values_.at((tp * sources_.size() + sp) * times_.size() + k);
}

double GreenEvaluation::at(std::size_t tp, std::size_t sp, std::size_t k) const {
  return values_.at((tp * sources_.size() + sp) * times_.size() + k);
}

double GreenEvaluation::value(VertexId i, VertexId j, std::size_t k) const {
  const auto& t = targets_.ids();
  const auto& s = sources_.ids();
  const auto ti = std::lower_bound(t.begin(), t.end(), i);
  const auto sj = std::lower_bound(s.begin(), s.end(), j);
  if (ti == t.end() || *ti != i || sj == s.end() || *sj != j) {
    throw std::out_of_range("GreenEvaluation: pair was not requested");
  }
  return at(static_cast<std::size_t>(ti - t.begin()), static_cast<std::size_t>(sj - s.begin()), k);
}

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Advances x <- e^{H dt} x by Taylor steps with ||H tau||_inf <= step_norm.
/// All series terms are nonnegative, so truncation only underestimates; the
/// tail after term n is at most ||term_n|| theta / (n + 2 - theta).
class TaylorPropagator {
 public:
  TaylorPropagator(const CouplingMatrix& H, const GreenOptions& opt)
      : H_(H), opt_(opt), term_(H.size()), next_(H.size()) {}

  void advance(std::vector<double>& x, std::vector<double>* integral, double dt) {
    if (dt <= 0.0) return;
    const double norm = H_.norm_inf();
    if (norm == 0.0) {
      if (integral) {
        for (std::size_t i = 0; i < x.size(); ++i) (*integral)[i] += dt * x[i];
      }
      return;
    }
    const double want = std::ceil(norm * dt / opt_.step_norm);
    if (want > static_cast<double>(opt_.max_steps)) {
      throw NumericError("green_function: t*||H|| = " + std::to_string(norm * dt) + " exceeds the step cap");
    }
    const auto steps = static_cast<std::size_t>(std::max(1.0, want));
    const double tau = dt / static_cast<double>(steps);
    const double theta = norm * tau;
    for (std::size_t s = 0; s < steps; ++s) step(x, integral, tau, theta);
  }

  double relative_error_estimate() const noexcept { return error_; }

 private:
  void step(std::vector<double>& x, std::vector<double>* integral, double tau, double theta) {
    term_ = x;
    if (integral) {
      for (std::size_t i = 0; i < x.size(); ++i) (*integral)[i] += tau * x[i];
    }
    const double base = max_abs(x);
    if (base == 0.0) return;
    double sum_norm = base;
    std::size_t n = 1;
    for (;; ++n) {
      if (n > opt_.max_terms_per_step) {
        throw NumericError("green_function: Taylor series did not converge within " +
                           std::to_string(opt_.max_terms_per_step) + " terms");
      }
      H_.multiply(term_, next_);
      const double scale = tau / static_cast<double>(n);
      double tnorm = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        next_[i] *= scale;
        x[i] += next_[i];
        tnorm = std::max(tnorm, next_[i]);
      }
      if (integral) {
        const double w = tau / static_cast<double>(n + 1);
        for (std::size_t i = 0; i < x.size(); ++i) (*integral)[i] += w * next_[i];
      }
      std::swap(term_, next_);
      sum_norm = std::max(sum_norm, tnorm);
      const double nn = static_cast<double>(n);
      if (nn + 2.0 > 2.0 * theta) {
        const double tail = tnorm * theta / (nn + 2.0 - theta);
        if (tail <= 1e-17 * max_abs(x)) {
          error_ += tail / max_abs(x) + 4.0 * std::numeric_limits<double>::epsilon();
          break;
        }
      }
    }
    if (error_ > opt_.tolerance) {
      throw NumericError("green_function: accumulated error estimate " + std::to_string(error_) +
                         " exceeds tolerance");
    }
  }

  const CouplingMatrix& H_;
  GreenOptions opt_;
  std::vector<double> term_, next_;
  double error_ = 0.0;
};

void check_times(std::span<const double> times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || !std::isfinite(times[k])) throw std::invalid_argument("times must be finite and >= 0");
    if (k > 0 && times[k] < times[k - 1]) throw std::invalid_argument("times must be ascending");
  }
}

}  // namespace

GreenEvaluation green_function(const CouplingMatrix& H, const VertexSet& sources, std::span<const double> times,
                               const VertexSet& targets, const GreenOptions& opt) {
  if (H.size() == 0) throw std::invalid_argument("green_function: empty graph");
  check_times(times);
  for (VertexId v : sources) {
    if (v >= H.size()) throw std::invalid_argument("green_function: source out of range");
  }
  for (VertexId v : targets) {
    if (v >= H.size()) throw std::invalid_argument("green_function: target out of range");
  }
  GreenEvaluation out(std::vector<double>(times.begin(), times.end()), sources, targets, GreenMethod::series);
  std::vector<double> x(H.size());
  for (std::size_t sp = 0; sp < sources.size(); ++sp) {
    std::fill(x.begin(), x.end(), 0.0);
    x[sources.ids()[sp]] = 1.0;
    TaylorPropagator prop(H, opt);
    double t_prev = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
      prop.advance(x, nullptr, times[k] - t_prev);
      t_prev = times[k];
      for (std::size_t tp = 0; tp < targets.size(); ++tp) out.at(tp, sp, k) = x[targets.ids()[tp]];
    }
  }
  return out;
}

GreenEvaluation green_function(const CommutativityGraph& g, const VertexSet& sources, std::span<const double> times,
                               const VertexSet& targets, const GreenOptions& opt) {
  return green_function(CouplingMatrix::from_graph(g), sources, times, targets, opt);
}

double taylor_coefficient(const CouplingMatrix& H, VertexId i, VertexId j, unsigned n) {
  if (i >= H.size() || j >= H.size()) throw std::invalid_argument("taylor_coefficient: vertex out of range");
  std::vector<double> x(H.size(), 0.0), y(H.size());
  x[j] = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    H.multiply(x, y);
    std::swap(x, y);
  }
  return x[i];
}

double taylor_coefficient(const CommutativityGraph& g, VertexId i, VertexId j, unsigned n) {
  return taylor_coefficient(CouplingMatrix::from_graph(g), i, j, n);
}

// ---------------------------------------------------------------------------

namespace {

// Propagates sum_{j in Y} sqrt(h_j) e_j; optionally integrates it in time.
std::vector<std::vector<double>> propagate_weighted(const CommutativityGraph& g, const VertexSet& Y,
                                                    std::span<const double> times, bool integrate,
                                                    const GreenOptions& opt) {
  const auto H = CouplingMatrix::from_graph(g);
  std::vector<double> x(g.vertex_count(), 0.0), integral(g.vertex_count(), 0.0);
  for (VertexId j : Y) x.at(j) = std::sqrt(g.vertex(j).weight);
  TaylorPropagator prop(H, opt);
  std::vector<std::vector<double>> snapshots;
  double t_prev = 0.0;
  for (double t : times) {
    prop.advance(x, integrate ? &integral : nullptr, t - t_prev);
    t_prev = t;
    snapshots.push_back(integrate ? integral : x);
  }
  return snapshots;
}

}  // namespace

BoundCurve term_operator_bound(const CommutativityGraph& g, VertexId i, const VertexSet& Y, double normB,
                               std::span<const double> times, const OperatorBoundOptions& opt) {
  if (Y.empty()) throw std::invalid_argument("term_operator_bound: empty support");
  if (!(normB > 0.0)) throw std::invalid_argument("term_operator_bound: norm must be positive");
  if (i >= g.vertex_count()) throw std::invalid_argument("term_operator_bound: vertex out of range");
  check_times(times);
  const auto snaps = propagate_weighted(g, Y, times, false, opt.green);
  BoundCurve curve{std::vector<double>(times.begin(), times.end()), {}, BoundKind::term, opt.cap};
  const double scale = 2.0 * normB / std::sqrt(g.vertex(i).weight);
  for (const auto& x : snaps) {
    double v = scale * x[i];
    // The term itself has unit norm, so 2||B|| is the trivial bound.
    if (opt.cap) v = std::min(v, 2.0 * normB);
    curve.values.push_back(v);
  }
  return curve;
}

BoundCurve operator_bound(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y, double normA,
                          double normB, std::span<const double> times, const OperatorBoundOptions& opt) {
  if (X.empty() || Y.empty()) throw std::invalid_argument("operator_bound: empty support");
  if (!(normA > 0.0) || !(normB > 0.0)) throw std::invalid_argument("operator_bound: norms must be positive");
  if (!(opt.initial_commutator >= 0.0)) throw std::invalid_argument("operator_bound: negative initial commutator");
  check_times(times);
  const auto snaps = propagate_weighted(g, Y, times, true, opt.green);
  BoundCurve curve{std::vector<double>(times.begin(), times.end()), {}, BoundKind::support, opt.cap};
  for (const auto& integral : snaps) {
    double acc = 0.0;
    for (VertexId i : X) acc += std::sqrt(g.vertex(i).weight) * integral.at(i);
    double v = opt.initial_commutator + 4.0 * normA * normB * acc;
    if (opt.cap) v = std::min(v, 2.0 * normA * normB);
    curve.values.push_back(v);
  }
  return curve;
}

double factorial_bound(double u, std::size_t dXY, double prefactorC, double t) {
  if (!(u > 0.0)) throw std::invalid_argument("factorial_bound: u must be positive");
  if (!(prefactorC > 0.0)) throw std::invalid_argument("factorial_bound: prefactor must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("factorial_bound: negative time");
  if (t == 0.0) return 0.0;
  const double m = static_cast<double>(dXY) + 1.0;
  return std::exp(std::log(prefactorC) + m * (std::log(u * t) - std::log(m)));
}

double generic_velocity(const CommutativityGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("generic_velocity: empty graph");
  return 2.0 * static_cast<double>(g.max_degree()) * g.max_edge_weight() * std::numbers::e;
}

double geometric_factor(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y) {
  const std::size_t dXY = graph_distance(g, X, Y);
  if (dXY == kUnreachable) throw std::invalid_argument("geometric_factor: supports are disconnected");
  double h = 0.0;
  for (VertexId i : X) {
    const auto dist = bfs_distances(g, VertexSet{i});
    for (VertexId j : Y) {
      if (dist[j] == kUnreachable) continue;
      h += std::sqrt(g.vertex(i).weight * g.vertex(j).weight) *
           std::exp(static_cast<double>(dXY) - static_cast<double>(dist[j]));
    }
  }
  return h;
}

double factorial_prefactor(double c, double hXY, double u, double normA, double normB) {
  if (!(u > 0.0)) throw std::invalid_argument("factorial_prefactor: u must be positive");
  return 2.0 * std::numbers::e * std::max(1.0, 2.0 * c * hXY / u) * normA * normB;
}

VelocityCertificate certify_velocity_constant(const CommutativityGraph& g, double u, const VertexSet& sources,
                                              std::size_t max_distance, const GreenOptions& opt) {
  if (!(u > 0.0)) throw std::invalid_argument("certify_velocity_constant: u must be positive");
  const auto H = CouplingMatrix::from_graph(g);
  VelocityCertificate cert;
  for (VertexId j : sources) {
    const auto dist = bfs_distances(g, VertexSet{j});
    std::size_t dmax = 0;
    for (auto d : dist) {
      if (d != kUnreachable) dmax = std::max(dmax, d);
    }
    if (max_distance) dmax = std::min(dmax, max_distance);
    if (dmax == 0) continue;
    std::vector<double> times;
    for (std::size_t d = 1; d <= dmax; ++d) times.push_back(static_cast<double>(d) / u);
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId i = 0; i < all.size(); ++i) all[i] = i;
    const auto G = green_function(H, VertexSet{j}, times, VertexSet(all), opt);
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
      const std::size_t d = dist[i];
      if (d == 0 || d == kUnreachable || d > dmax) continue;
      const double v = G.at(i, 0, d - 1);
      if (v > cert.c) cert = VelocityCertificate{v, i, j, d};
    }
  }
  return cert;
}

}  // namespace lrb
