// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrbound/hamiltonian.hpp"

namespace lrb {

using VertexId = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> ids_;
};

struct VertexInfo {
  std::string label;
  double weight = 0.0;               // |h_i|
  std::optional<TermBody> body;      // absent for custom coefficient graphs
  std::optional<Coord> cell;         // set when expanded from a unit cell
  std::optional<std::size_t> sublattice;
};

struct Neighbor {
  VertexId to = 0;
  double weight = 0.0;
};

/// Weighted undirected graph of Hamiltonian terms. Immutable once built.
class CommutativityGraph {
 public:
  CommutativityGraph() = default;
  /// Edge weights are set to 2 sqrt(w_i w_j). Throws std::invalid_argument on
  /// self-loops, out-of-range endpoints or nonpositive vertex weights.
  CommutativityGraph(std::vector<VertexInfo> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const VertexInfo& vertex(VertexId v) const { return vertices_.at(v); }
  std::span<const Neighbor> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  std::optional<VertexId> find(std::string_view label) const;
  std::size_t max_degree() const noexcept;
  double max_edge_weight() const noexcept;

 private:
  std::vector<VertexInfo> vertices_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size n+1
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
};

/// One vertex per nonzero term, edges between anticommuting terms. The spec
/// must be in finite-lattice mode (translation-invariant specs go through
/// unit_cell_from_spec).
CommutativityGraph build_graph(const HamiltonianSpec& spec);

/// Removes the mutually non-adjacent vertices F and links every pair of
/// survivors that shared a neighbor in F. Throws std::invalid_argument naming
/// the first adjacent pair found in F.
CommutativityGraph reduce_graph(const CommutativityGraph& g, const VertexSet& F);

/// Vertices whose term anticommutes with B.
VertexSet support_of(const CommutativityGraph& g, const TermBody& B);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Multi-source BFS hop counts from X (kUnreachable when disconnected).
std::vector<std::size_t> bfs_distances(const CommutativityGraph& g, const VertexSet& X);

/// min over i in X, j in Y of the hop distance; kUnreachable when disconnected.
std::size_t graph_distance(const CommutativityGraph& g, const VertexSet& X, const VertexSet& Y);

/// Edge-list export: `vertex <idx> <label> <weight>` and `edge <i> <j> <weight>`.
std::string export_edge_list(const CommutativityGraph& g);

}  // namespace lrb
