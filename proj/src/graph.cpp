// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lrbound/numerics.hpp"

namespace lrb {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

CommutativityGraph::CommutativityGraph(std::vector<VertexInfo> vertices,
                                       std::vector<std::pair<VertexId, VertexId>> edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  for (const auto& v : vertices_) {
    if (!(v.weight > 0.0) || !std::isfinite(v.weight)) {
      throw std::invalid_argument("vertex '" + v.label + "' must have a positive finite weight");
    }
  }
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) throw std::invalid_argument("self-loop on '" + vertices_[e.first].label + "'");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    const double w = 2.0 * std::sqrt(vertices_[a].weight * vertices_[b].weight);
    adjacency_[fill[a]++] = Neighbor{b, w};
    adjacency_[fill[b]++] = Neighbor{a, w};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
              [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
  }
}

std::span<const Neighbor> CommutativityGraph::neighbors(VertexId v) const {
  if (v >= vertices_.size()) throw std::out_of_range("vertex index out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool CommutativityGraph::adjacent(VertexId a, VertexId b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), Neighbor{b, 0.0},
                            [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
}

std::optional<VertexId> CommutativityGraph::find(std::string_view label) const {
  for (VertexId i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t CommutativityGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) best = std::max(best, offsets_[i + 1] - offsets_[i]);
  return best;
}

double CommutativityGraph::max_edge_weight() const noexcept {
  double best = 0.0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.weight);
  return best;
}

// ---------------------------------------------------------------------------

namespace {

// Terms can only anticommute when they share a site (Pauli) or a mode
// (Majorana), so candidate pairs come from a per-site index.
std::vector<std::pair<VertexId, VertexId>> anticommuting_pairs(const std::vector<VertexInfo>& vertices) {
  std::map<Mode, std::vector<VertexId>> by_mode;
  std::map<Site, std::vector<VertexId>> by_site;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    const TermBody& body = *vertices[i].body;
    if (const auto* p = std::get_if<PauliString>(&body)) {
      for (const auto& f : p->factors()) by_site[f.first].push_back(i);
    } else {
      for (const auto& m : std::get<MajoranaMonomial>(body).modes()) by_mode[m].push_back(i);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> candidates;
  auto collect = [&](const auto& index) {
    for (const auto& [key, list] : index) {
      for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = a + 1; b < list.size(); ++b) candidates.emplace_back(list[a], list[b]);
      }
    }
  };
  collect(by_site);
  collect(by_mode);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : candidates) {
    if (!commutes(*vertices[a].body, *vertices[b].body)) edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

CommutativityGraph build_graph(const HamiltonianSpec& spec) {
  if (spec.basis == BasisKind::custom) {
    std::vector<VertexInfo> vertices;
    std::vector<std::size_t> remap(spec.custom_vertices.size(), kUnreachable);
    for (std::size_t i = 0; i < spec.custom_vertices.size(); ++i) {
      const auto& cv = spec.custom_vertices[i];
      if (cv.weight == 0.0) continue;
      remap[i] = vertices.size();
      vertices.push_back(VertexInfo{cv.label, cv.weight, std::nullopt, std::nullopt, std::nullopt});
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : spec.custom_edges) {
      if (remap[e.a] != kUnreachable && remap[e.b] != kUnreachable) edges.emplace_back(remap[e.a], remap[e.b]);
    }
    return CommutativityGraph(std::move(vertices), std::move(edges));
  }
  if (spec.translation_invariant()) {
    throw std::invalid_argument("build_graph needs a finite lattice; use unit_cell_from_spec for ti specs");
  }
  std::vector<VertexInfo> vertices;
  for (const auto& term : spec.terms) {
    if (term.coefficient == 0.0) continue;
    vertices.push_back(VertexInfo{term.label, term.magnitude(), term.body, std::nullopt, std::nullopt});
  }
  auto edges = anticommuting_pairs(vertices);
  return CommutativityGraph(std::move(vertices), std::move(edges));
}

CommutativityGraph reduce_graph(const CommutativityGraph& g, const VertexSet& F) {
  const std::size_t n = g.vertex_count();
  for (VertexId f : F) {
    if (f >= n) throw std::invalid_argument("reduce_graph: vertex index out of range");
    for (const auto& nb : g.neighbors(f)) {
      if (F.contains(nb.to)) {
        throw std::invalid_argument("reduce_graph: eliminated vertices '" + g.vertex(f).label + "' and '" +
                                    g.vertex(nb.to).label + "' do not commute");
      }
    }
  }
  std::vector<std::size_t> remap(n, kUnreachable);
  std::vector<VertexInfo> vertices;
  for (VertexId i = 0; i < n; ++i) {
    if (F.contains(i)) continue;
    remap[i] = vertices.size();
    vertices.push_back(g.vertex(i));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    if (remap[i] == kUnreachable) continue;
    for (const auto& nb : g.neighbors(i)) {
      if (remap[nb.to] != kUnreachable && i < nb.to) edges.emplace_back(remap[i], remap[nb.to]);
    }
  }
  for (VertexId f : F) {
    const auto nb = g.neighbors(f);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) edges.emplace_back(remap[nb[a].to], remap[nb[b].to]);
    }
  }
  return CommutativityGraph(std::move(vertices), std::move(edges));
}

VertexSet support_of(const CommutativityGraph& g, const TermBody& B) {
  std::vector<VertexId> out;
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    const auto& body = g.vertex(i).body;
    if (!body) throw std::invalid_argument("support_of: graph has no operator bodies (custom basis)");
    if (!commutes(*body, B)) out.push_back(i);
  }
  return VertexSet(std::move(out));
}

std::vector<std::size_t> bfs_distances(const CommutativityGraph& g, const VertexSet& X) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId x : X) {
    if (x >= g.vertex_count()) throw std::invalid_argument("bfs_distances: vertex index out of range");
    dist[x] = 0;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(v)) {
      if (dist[nb.to] == kUnreachable) {
        dist[nb.to] = dist[v] + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return dist;
}

std::size_t graph_distance(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y) {
  if (X.empty() || Y.empty()) throw std::invalid_argument("graph_distance: empty vertex set");
  const auto dist = bfs_distances(g, X);
  std::size_t best = kUnreachable;
  for (VertexId y : Y) best = std::min(best, dist.at(y));
  return best;
}

std::string export_edge_list(const CommutativityGraph& g) {
  std::ostringstream out;
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    out << "vertex " << i << ' ' << g.vertex(i).label << ' ' << format_real(g.vertex(i).weight) << '\n';
  }
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    for (const auto& nb : g.neighbors(i)) {
      if (i < nb.to) out << "edge " << i << ' ' << nb.to << ' ' << format_real(nb.weight) << '\n';
    }
  }
  return out.str();
}

}  // namespace lrb
