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
#include <cstdint>

#include "lwheel/kernels.hpp"

namespace lwheel::kernels {

namespace serial {

namespace {

struct CliqueSearch {
  const Graph& g;
  std::vector<Vertex> best;
  std::vector<Vertex> current;

  void expand(const std::vector<Vertex>& candidates) {
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
      expand(next);
      current.pop_back();
    }
  }
};

struct HoleSearch {
  const Graph& g;
  int best;  // shortest hole found so far, or bound + 1
  std::vector<Vertex> path;

  bool touches_interior(Vertex x) const {
    // path[0] is the start, path.back() the end; both may touch x.
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      if (g.adjacent(x, path[j])) return true;
    }
    return false;
  }

  void extend() {
    const Vertex start = path.front();
    const Vertex end = path.back();
    const auto len = static_cast<int>(path.size());
    for (Vertex x : g.neighbors(end)) {
      if (x <= start || std::find(path.begin(), path.end(), x) != path.end()) continue;
      if (touches_interior(x)) continue;
      if (len >= 2 && g.adjacent(x, start)) {
        if (len >= 3 && len + 1 < best) best = len + 1;
        continue;
      }
      // Closing later needs at least one more vertex.
      if (len + 2 < best) {
        path.push_back(x);
        extend();
        path.pop_back();
      }
    }
  }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
  CliqueSearch search{g, {}, {}};
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> candidates;
    for (Vertex w : g.neighbors(v)) {
      if (w > v) candidates.push_back(w);
    }
    if (1 + candidates.size() <= search.best.size()) continue;
    search.current = {v};
    search.expand(candidates);
  }
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), search.best};
}

std::optional<int> shortest_hole(const Graph& g, int bound) {
  HoleSearch search{g, bound + 1, {}};
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex s = 0; s < n; ++s) {
    search.path = {s};
    search.extend();
  }
  if (search.best > bound) return std::nullopt;
  return search.best;
}

}  // namespace serial

// ------------------------------------------------------- independent sets

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0), n_(n) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  std::size_t count_and(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += static_cast<std::size_t>(__builtin_popcountll(words_[k] & other.words_[k]));
    }
    return c;
  }
  void subtract(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }
  std::size_t size() const { return n_; }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t n_;
};

struct MisSearch {
  std::vector<Bitset> closed;  // N[v]
  std::vector<Vertex> best;
  std::vector<Vertex> current;

  void take(Vertex v, Bitset& rest) {
    current.push_back(v);
    rest.subtract(closed[static_cast<std::size_t>(v)]);
  }

  void solve(Bitset rest) {
    const std::size_t taken = current.size();
    // Vertices of degree <= 1 in the remaining graph can always be taken.
    while (true) {
      if (current.size() + rest.count() <= best.size()) {
        current.resize(taken);
        return;
      }
      std::size_t pick = rest.size();
      std::size_t branch = rest.size();
      std::size_t branch_degree = 0;
      rest.for_each([&](std::size_t v) {
        std::size_t deg = rest.count_and(closed[v]) - 1;
        if (deg <= 1 && pick == rest.size()) pick = v;
        if (branch == rest.size() || deg > branch_degree) {
          branch = v;
          branch_degree = deg;
        }
      });
      if (branch == rest.size()) {  // nothing left
        if (current.size() > best.size()) best = current;
        current.resize(taken);
        return;
      }
      if (pick != rest.size()) {
        take(static_cast<Vertex>(pick), rest);
        continue;
      }
      Bitset with = rest;
      take(static_cast<Vertex>(branch), with);
      solve(with);
      current.pop_back();
      rest.reset(branch);
      solve(rest);
      current.resize(taken);
      return;
    }
  }
};

}  // namespace

IndependentSetResult max_independent_set(const Graph& g) {
  const std::size_t n = g.size();
  MisSearch search;
  search.closed.assign(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) {
    search.closed[v].set(v);
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) search.closed[v].set(static_cast<std::size_t>(w));
  }
  Bitset all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  search.solve(all);
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), search.best};
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(static_cast<Vertex>(v));
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  for (std::size_t v = 0; v < n; ++v) buckets[degree[v]].push_back(static_cast<Vertex>(v));
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t low = 0;
  while (order.size() < n) {
    while (buckets[low].empty()) ++low;
    Vertex v = buckets[low].back();
    buckets[low].pop_back();
    auto vi = static_cast<std::size_t>(v);
    if (removed[vi] || degree[vi] != low) continue;  // stale entry
    removed[vi] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      --degree[wi];
      buckets[degree[wi]].push_back(w);
      if (degree[wi] < low) low = degree[wi];
    }
  }
  return order;
}

}  // namespace lwheel::kernels
