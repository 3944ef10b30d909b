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

#include <algorithm>
#include <atomic>

#include "lwheel/kernels.hpp"

namespace lwheel::kernels::parallel {

namespace {

// Clique search inside one root's forward neighborhood; candidates are kept
// in degeneracy order, and the incumbent is local to the root.
void expand(const Graph& g, std::vector<Vertex>& current, const std::vector<Vertex>& candidates,
            std::vector<Vertex>& best) {
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) <= best.size()) return;
    Vertex u = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(u, candidates[j])) next.push_back(candidates[j]);
    }
    current.push_back(u);
    expand(g, current, next, best);
    current.pop_back();
  }
}

void extend_hole(const Graph& g, std::vector<Vertex>& path, std::atomic<int>& best) {
  const Vertex start = path.front();
  const auto len = static_cast<int>(path.size());
  for (Vertex x : g.neighbors(path.back())) {
    if (x <= start || std::find(path.begin(), path.end(), x) != path.end()) continue;
    bool chord = false;
    for (std::size_t j = 1; j + 1 < path.size() && !chord; ++j) chord = g.adjacent(x, path[j]);
    if (chord) continue;
    if (len >= 2 && g.adjacent(x, start)) {
      if (len >= 3) {
        int seen = best.load(std::memory_order_relaxed);
        while (len + 1 < seen && !best.compare_exchange_weak(seen, len + 1)) {
        }
      }
      continue;
    }
    if (len + 2 < best.load(std::memory_order_relaxed)) {
      path.push_back(x);
      extend_hole(g, path, best);
      path.pop_back();
    }
  }
}

}  // namespace

CliqueResult max_clique(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.size());
  if (n == 0) return {};
  const std::vector<Vertex> order = degeneracy_order(g);
  std::vector<std::size_t> rank(g.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[static_cast<std::size_t>(order[r])] = r;

  std::vector<std::vector<Vertex>> per_root(g.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < n; ++r) {
    const Vertex v = order[static_cast<std::size_t>(r)];
    std::vector<Vertex> forward;
    for (Vertex w : g.neighbors(v)) {
      if (rank[static_cast<std::size_t>(w)] > static_cast<std::size_t>(r)) forward.push_back(w);
    }
    std::sort(forward.begin(), forward.end(), [&](Vertex a, Vertex b) {
      return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
    });
    std::vector<Vertex> current{v};
    std::vector<Vertex> best{v};
    expand(g, current, forward, best);
    per_root[static_cast<std::size_t>(r)] = std::move(best);
  }

  std::size_t winner = 0;
  for (std::size_t r = 1; r < per_root.size(); ++r) {
    if (per_root[r].size() > per_root[winner].size()) winner = r;
  }
  CliqueResult result;
  result.witness = per_root[winner];
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<int>(result.witness.size());
  return result;
}

std::optional<int> shortest_hole(const Graph& g, int bound) {
  std::atomic<int> best{bound + 1};
  const auto n = static_cast<std::int64_t>(g.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < n; ++s) {
    std::vector<Vertex> path{static_cast<Vertex>(s)};
    extend_hole(g, path, best);
  }
  int found = best.load();
  if (found > bound) return std::nullopt;
  return found;
}

}  // namespace lwheel::kernels::parallel
