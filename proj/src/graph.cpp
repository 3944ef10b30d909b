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

#include "lwheel/graph.hpp"

#include <algorithm>

#include "lwheel/error.hpp"

namespace lwheel {

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : adj_(n) {
  for (auto [u, v] : edges) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t Graph::num_edges() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("self-loops are not allowed");
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[static_cast<std::size_t>(u)], v);
  insert(adj_[static_cast<std::size_t>(v)], u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  auto erase = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) list.erase(it);
  };
  erase(adj_[static_cast<std::size_t>(u)], v);
  erase(adj_[static_cast<std::size_t>(v)], u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.size(), -1);
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    local[static_cast<std::size_t>(vertices[j])] = static_cast<int>(j);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    for (Vertex w : g.neighbors(vertices[j])) {
      int lw = local[static_cast<std::size_t>(w)];
      if (lw > static_cast<int>(j)) edges.emplace_back(static_cast<Vertex>(j), lw);
    }
  }
  return Graph(vertices.size(), edges);
}

std::vector<Arc> materialize_arcs(const WheelPrefix& prefix) {
  std::vector<Arc> arcs;
  for (int layer = 1; layer <= prefix.num_layers(); ++layer) {
    const int size = prefix.layer_size(layer);
    const auto base = static_cast<Vertex>(prefix.layer_offset(layer));
    for (int p = 0; p < size; ++p) arcs.push_back({base + p, base + (p + 1) % size});
  }
  for (std::size_t v = 0; v < prefix.num_vertices(); ++v) {
    for (VertexId w : prefix.record(v).up) {
      arcs.push_back({static_cast<Vertex>(prefix.index(w)), static_cast<Vertex>(v)});
    }
  }
  return arcs;
}

Graph underlying_graph(const WheelPrefix& prefix) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Arc a : materialize_arcs(prefix)) edges.emplace_back(a.tail, a.head);
  return Graph(prefix.num_vertices(), edges);
}

std::vector<int> layer_labels(const WheelPrefix& prefix) {
  std::vector<int> labels(prefix.num_vertices());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = prefix.layer_of(v);
  return labels;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

}  // namespace lwheel
