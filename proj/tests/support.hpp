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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lwheel/graph.hpp"
#include "lwheel/slow_function.hpp"
#include "lwheel/wheel.hpp"

namespace lwheel::testing {

struct PrefixCase {
  int ell;
  std::string f;
  int layers;
  std::size_t vertices;

  std::string name() const {
    return "ell" + std::to_string(ell) + "_" + f + "_t" + std::to_string(layers);
  }
};

/// Every (ell, f, t) with at most `max_vertices` vertices.
inline std::vector<PrefixCase> prefix_cases(std::vector<int> ells, std::vector<std::string> fs,
                                            std::size_t max_vertices) {
  std::vector<PrefixCase> out;
  for (int ell : ells) {
    for (const auto& spec : fs) {
      WheelPrefix prefix = build_first_layer(ell, SlowFunction::parse(spec));
      while (prefix.num_vertices() <= max_vertices) {
        out.push_back({ell, spec, prefix.num_layers(), prefix.num_vertices()});
        if (prefix.num_vertices() + static_cast<std::size_t>(next_layer_size(prefix)) > max_vertices) break;
        prefix = extend_layer(std::move(prefix), static_cast<std::int64_t>(max_vertices));
      }
    }
  }
  return out;
}

inline WheelPrefix build(const PrefixCase& c) {
  return build_prefix(c.ell, SlowFunction::parse(c.f), c.layers);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline std::vector<Vertex> members_of(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; v < 32; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

// ------------------------------------------------ brute-force oracles (n <= 20)

inline int brute_clique(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << g.size()); ++mask) {
    auto s = members_of(mask);
    if (static_cast<int>(s.size()) > best && is_clique(g, s)) best = static_cast<int>(s.size());
  }
  return best;
}

inline int brute_alpha(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << g.size()); ++mask) {
    auto s = members_of(mask);
    if (static_cast<int>(s.size()) > best && is_independent(g, s)) best = static_cast<int>(s.size());
  }
  return best;
}

/// Smallest induced cycle on >= 4 vertices, or 0.
inline int brute_shortest_hole(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << g.size()); ++mask) {
    auto s = members_of(mask);
    if (s.size() < 4 || (best && static_cast<int>(s.size()) >= best)) continue;
    Graph h = induced_subgraph(g, s);
    bool two_regular = true;
    for (std::size_t v = 0; v < h.size(); ++v) two_regular = two_regular && h.degree(static_cast<Vertex>(v)) == 2;
    if (!two_regular) continue;
    // Connected 2-regular means a single cycle.
    std::vector<char> seen(h.size(), 0);
    std::vector<Vertex> todo{0};
    seen[0] = 1;
    std::size_t reached = 0;
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      ++reached;
      for (Vertex w : h.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          todo.push_back(w);
        }
      }
    }
    if (reached == h.size()) best = static_cast<int>(s.size());
  }
  return best;
}

/// Treewidth as the minimum over all elimination orders (n <= 8).
inline int brute_treewidth(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(n) - 1;
  do {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (!gone[w] && adj[static_cast<std::size_t>(v)][w]) nb.push_back(static_cast<int>(w));
      }
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb) {
        for (int b : nb) {
          if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        }
      }
      gone[static_cast<std::size_t>(v)] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return n == 0 ? -1 : best;
}

}  // namespace lwheel::testing
