// Copyright 2026 The lwheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lwheel/wheel.hpp"

namespace lwheel {

using Vertex = int;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t num_edges() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// G[S]; vertex j of the result is vertices[j].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// An arc of the oriented wheel, in global vertex indices.
struct Arc {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// All arcs of the prefix: layer cycles, then upward arcs w -> v for w in N^up(v).
std::vector<Arc> materialize_arcs(const WheelPrefix& prefix);

/// Underlying undirected graph of the prefix, indexed by global vertex index.
Graph underlying_graph(const WheelPrefix& prefix);

/// Layer label of every vertex, indexed by global vertex index.
std::vector<int> layer_labels(const WheelPrefix& prefix);

/// True iff the given vertices are pairwise adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

}  // namespace lwheel
