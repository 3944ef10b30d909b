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

#include "lwheel/width.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_set>

#include "lwheel/error.hpp"

namespace lwheel {

Json extended_json(Extended value) {
  if (!is_finite(value)) return "inf";
  return value;
}

int TreeDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& bag : bags) widest = std::max(widest, bag.size());
  return static_cast<int>(widest) - 1;
}

// ------------------------------------------------------- validation

DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& td,
                                       std::span<const Vertex> domain) {
  DecompositionCheck check;
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) return check;

  // A tree on `nodes` vertices: nodes-1 edges and connected.
  std::vector<std::vector<int>> tree(nodes);
  bool edges_ok = td.tree_edges.size() + 1 == nodes;
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes || static_cast<std::size_t>(b) >= nodes) {
      edges_ok = false;
      continue;
    }
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    ++reached;
    for (int t : tree[static_cast<std::size_t>(s)]) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  check.is_tree = edges_ok && reached == nodes;

  std::vector<char> in_domain(g.size(), 0);
  for (Vertex v : domain) in_domain[static_cast<std::size_t>(v)] = 1;

  // Bags holding each vertex.
  std::vector<std::vector<int>> holders(g.size());
  for (std::size_t s = 0; s < nodes; ++s) {
    for (Vertex v : td.bags[s]) holders[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
  }
  check.vertex_coverage = std::all_of(domain.begin(), domain.end(), [&](Vertex v) {
    return !holders[static_cast<std::size_t>(v)].empty();
  });

  check.edge_coverage = true;
  for (Vertex u : domain) {
    for (Vertex w : g.neighbors(u)) {
      if (w < u || !in_domain[static_cast<std::size_t>(w)]) continue;
      bool covered = false;
      for (int s : holders[static_cast<std::size_t>(u)]) {
        const auto& bag = td.bags[static_cast<std::size_t>(s)];
        if (std::binary_search(bag.begin(), bag.end(), w)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        check.edge_coverage = false;
        break;
      }
    }
    if (!check.edge_coverage) break;
  }

  // The bags holding v must induce a connected subtree.
  check.subtree_connectivity = check.is_tree;
  if (check.is_tree) {
    std::vector<char> mark(nodes, 0);
    for (Vertex v : domain) {
      const auto& hs = holders[static_cast<std::size_t>(v)];
      if (hs.size() <= 1) continue;
      for (int s : hs) mark[static_cast<std::size_t>(s)] = 1;
      std::vector<char> visited(nodes, 0);
      std::vector<int> todo{hs.front()};
      visited[static_cast<std::size_t>(hs.front())] = 1;
      std::size_t count = 0;
      while (!todo.empty()) {
        int s = todo.back();
        todo.pop_back();
        ++count;
        for (int t : tree[static_cast<std::size_t>(s)]) {
          auto ti = static_cast<std::size_t>(t);
          if (mark[ti] && !visited[ti]) {
            visited[ti] = 1;
            todo.push_back(t);
          }
        }
      }
      for (int s : hs) mark[static_cast<std::size_t>(s)] = 0;
      if (count != hs.size()) {
        check.subtree_connectivity = false;
        break;
      }
    }
  }
  return check;
}

DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return check_decomposition(g, td, all);
}

// --------------------------------------------------- exact treewidth

namespace {

using Mask = std::uint64_t;

class EliminationSearch {
 public:
  explicit EliminationSearch(const Graph& g) : n_(static_cast<int>(g.size())), adj_(g.size(), 0) {
    for (int v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << w;
    }
  }

  // Neighbors of v in the graph obtained by eliminating `gone`.
  Mask eliminated_neighbors(Mask gone, int v) const {
    Mask result = 0;
    Mask visited = 0;
    Mask todo = adj_[static_cast<std::size_t>(v)];
    result |= todo & ~gone;
    todo &= gone;
    while (todo) {
      int w = __builtin_ctzll(todo);
      todo &= todo - 1;
      visited |= Mask{1} << w;
      Mask nb = adj_[static_cast<std::size_t>(w)];
      result |= nb & ~gone;
      todo |= nb & gone & ~visited;
    }
    return result & ~(Mask{1} << v);
  }

  bool decide(int k) {
    failed_.clear();
    return search(0, k);
  }

 private:
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  // True if `set` is a clique after dropping at most one of its vertices.
  static bool almost_clique(const std::vector<Mask>& nbs, Mask set) {
    Mask missing = 0;  // vertices with a non-neighbour inside the set
    for (Mask s = set; s; s &= s - 1) {
      int v = __builtin_ctzll(s);
      if ((nbs[static_cast<std::size_t>(v)] & set & ~(Mask{1} << v)) != (set & ~(Mask{1} << v))) missing |= Mask{1} << v;
    }
    if (!missing) return true;
    for (Mask s = missing; s; s &= s - 1) {
      int u = __builtin_ctzll(s);
      const Mask rest = set & ~(Mask{1} << u);
      bool ok = true;
      for (Mask r = rest & missing; r && ok; r &= r - 1) {
        int v = __builtin_ctzll(r);
        ok = (nbs[static_cast<std::size_t>(v)] & rest & ~(Mask{1} << v)) == (rest & ~(Mask{1} << v));
      }
      if (ok) return true;
    }
    return false;
  }

 public:
  // Minor-min-width: contract a minimum-degree vertex into its neighbour
  // with the fewest common neighbours; the largest minimum degree seen is a
  // treewidth lower bound.
  static int contraction_bound(std::vector<Mask> nbs, Mask alive) {
    int bound = 0;
    while (__builtin_popcountll(alive) > 1) {
      int v = -1, best = 65;
      for (Mask a = alive; a; a &= a - 1) {
        int w = __builtin_ctzll(a);
        int d = __builtin_popcountll(nbs[static_cast<std::size_t>(w)]);
        if (d < best) best = d, v = w;
      }
      bound = std::max(bound, best);
      const Mask vbit = Mask{1} << v;
      const Mask nv = nbs[static_cast<std::size_t>(v)];
      alive &= ~vbit;
      if (!nv) continue;
      int u = -1, common = 65;
      for (Mask a = nv; a; a &= a - 1) {
        int w = __builtin_ctzll(a);
        int c = __builtin_popcountll(nbs[static_cast<std::size_t>(w)] & nv);
        if (c < common) common = c, u = w;
      }
      const Mask ubit = Mask{1} << u;
      for (Mask a = nv; a; a &= a - 1) nbs[static_cast<std::size_t>(__builtin_ctzll(a))] &= ~vbit;
      const Mask gain = nv & ~ubit;
      nbs[static_cast<std::size_t>(u)] |= gain;
      for (Mask a = gain; a; a &= a - 1) nbs[static_cast<std::size_t>(__builtin_ctzll(a))] |= ubit;
    }
    return bound;
  }

  int initial_bound() const {
    std::vector<Mask> nbs = adj_;
    return contraction_bound(std::move(nbs), full());
  }

 private:
  bool search(Mask gone, int k) {
    const int remaining = n_ - __builtin_popcountll(gone);
    if (remaining <= k + 1) return true;
    if (failed_.count(gone)) return false;
    std::vector<Mask> nbs(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      if (!(gone >> v & 1)) nbs[static_cast<std::size_t>(v)] = eliminated_neighbors(gone, v);
    }
    if (contraction_bound(nbs, ~gone & full()) > k) {
      failed_.insert(gone);
      return false;
    }
    Mask candidates = 0;
    for (int v = 0; v < n_; ++v) {
      if (gone >> v & 1) continue;
      const Mask nb = nbs[static_cast<std::size_t>(v)];
      if (__builtin_popcountll(nb) > k) continue;
      // Simplicial and almost simplicial vertices of degree <= k are safe:
      // eliminating them leaves a minor of the current graph.
      if (almost_clique(nbs, nb)) return search(gone | Mask{1} << v, k) || (failed_.insert(gone), false);
      candidates |= Mask{1} << v;
    }
    for (Mask c = candidates; c; c &= c - 1) {
      int v = __builtin_ctzll(c);
      if (search(gone | Mask{1} << v, k)) return true;
    }
    failed_.insert(gone);
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  std::unordered_set<Mask> failed_;
};

}  // namespace

int exact_treewidth_small(const Graph& g) {
  if (g.size() > kExactTreewidthLimit) {
    throw SolverBudgetError("exact treewidth is limited to " + std::to_string(kExactTreewidthLimit) +
                            " vertices, graph has " + std::to_string(g.size()));
  }
  if (g.size() == 0) return -1;
  EliminationSearch search(g);
  const int lower = search.initial_bound();
  for (int k = lower;; ++k) {
    if (search.decide(k)) return k;
  }
}

// ----------------------------------------------------- formula bounds

Extended tw_upper_bound_formula(int ell, const SlowFunction& f, int omega) {
  if (omega < 1) throw PreconditionError("omega must be >= 1");
  Extended order = separation_order_bound(f, ell, omega);
  return is_finite(order) ? 15 * order : kInfinity;
}

Extended tw_upper_bound_formula_stated(int ell, const SlowFunction& f, int omega) {
  if (omega < 1) throw PreconditionError("omega must be >= 1");
  Extended big_f = cumulative_at(f, omega + 1);
  if (!is_finite(big_f)) return kInfinity;
  return 15 * (big_f + static_cast<Extended>(ell + 1) * omega - 2);
}

MinorCheck tw_lower_bound_minor(const WheelPrefix& prefix, const Graph& g) {
  return layer_minor_check(prefix, g);
}

// ------------------------------------------- separator decompositions

namespace {

struct SeparatorRecursion {
  const WheelPrefix& prefix;
  const Graph& g;
  TreeDecomposition td;

  int leaf(std::vector<Vertex> bag) {
    td.bags.push_back(std::move(bag));
    return static_cast<int>(td.bags.size()) - 1;
  }

  // Builds a decomposition of G[part] whose root bag contains `boundary`.
  int build(const std::vector<Vertex>& part, const std::vector<Vertex>& boundary) {
    if (part.size() <= 5 || is_clique(g, part)) return leaf(part);
    TargetSet x = make_target_set(prefix, g, part, part.size());
    BalancedSeparation sep = balanced_separation(prefix, x);
    const auto& a = sep.separation.a;
    const auto& b = sep.separation.b;
    if (a.size() == part.size() || b.size() == part.size()) return leaf(part);

    std::vector<Vertex> cut = sep.separation.intersection();
    std::vector<Vertex> bag;
    std::set_union(boundary.begin(), boundary.end(), cut.begin(), cut.end(), std::back_inserter(bag));
    const int node = leaf(bag);
    for (const auto* side : {&a, &b}) {
      std::vector<Vertex> inherited;
      std::set_intersection(boundary.begin(), boundary.end(), side->begin(), side->end(),
                            std::back_inserter(inherited));
      std::vector<Vertex> child_boundary;
      std::set_union(inherited.begin(), inherited.end(), cut.begin(), cut.end(),
                     std::back_inserter(child_boundary));
      int child = build(*side, child_boundary);
      td.tree_edges.emplace_back(node, child);
    }
    return node;
  }
};

}  // namespace

TreeDecomposition decomposition_from_separators(const WheelPrefix& prefix, const Graph& g,
                                                std::vector<Vertex> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.empty()) throw PreconditionError("target set is empty");
  SeparatorRecursion recursion{prefix, g, {}};
  recursion.build(x, {});
  return std::move(recursion.td);
}

int independent_width(const TreeDecomposition& td, const Graph& g, std::size_t budget) {
  int widest = 0;
  for (const auto& bag : td.bags) {
    widest = std::max(widest, max_independent_set_exact(induced_subgraph(g, bag), budget).size);
  }
  return widest;
}

// --------------------------------------------------- tree-independence

namespace {

Json id_json(const WheelPrefix& prefix, Vertex v) {
  VertexId id = prefix.id(static_cast<std::size_t>(v));
  return Json::array({id.layer, id.position});
}

// Colours a transversal greedily from the lowest layer up (the reverse of
// its elimination order), which is optimal on chordal graphs, and returns
// the largest colour class as an independent-set witness.
Certificate colour_transversal(const WheelPrefix& prefix, const Graph& g,
                               const std::vector<Vertex>& y, int target) {
  Certificate peo = transversal_chordality_check(prefix, g, y);
  Certificate cert;
  cert.kind = "coloring";
  cert.data["peo"] = peo.to_json();
  if (!peo.pass) return cert;
  const int omega = static_cast<int>(peo.bound);

  std::vector<Vertex> order = y;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return prefix.layer_of(static_cast<std::size_t>(a)) < prefix.layer_of(static_cast<std::size_t>(b));
  });
  std::vector<int> colour(order.size(), -1);
  int used = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::vector<char> taken(order.size() + 1, 0);
    for (std::size_t r = 0; r < j; ++r) {
      if (g.adjacent(order[j], order[r])) taken[static_cast<std::size_t>(colour[r])] = 1;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    colour[j] = c;
    used = std::max(used, c + 1);
  }
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(used));
  for (std::size_t j = 0; j < order.size(); ++j) classes[static_cast<std::size_t>(colour[j])].push_back(order[j]);
  auto largest = *std::max_element(classes.begin(), classes.end(),
                                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::sort(largest.begin(), largest.end());

  const int alpha = max_independent_set_exact(induced_subgraph(g, y), y.size()).size;
  Json witness = Json::array();
  for (Vertex v : largest) witness.push_back(id_json(prefix, v));
  cert.data["omega"] = omega;
  cert.data["colours"] = used;
  cert.data["independent_class"] = std::move(witness);
  cert.data["alpha"] = alpha;

  const auto size = static_cast<int>(y.size());
  cert.pass = used == omega && is_independent(g, largest) &&
              static_cast<int>(largest.size()) * omega >= size &&
              static_cast<int>(largest.size()) >= target && alpha >= static_cast<int>(largest.size());
  cert.bound = static_cast<std::int64_t>(largest.size());
  return cert;
}

}  // namespace

Json TaCertificate::to_json() const {
  Json j;
  j["value"] = value;
  j["layers"] = layers;
  j["k"] = k;
  j["minor"] = minor.certificate.to_json();
  j["clique"] = clique.to_json();
  Json ts = Json::array();
  for (const auto& t : transversals) ts.push_back(t.to_json());
  j["transversals"] = std::move(ts);
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

TaCertificate ta_lower_bound_certified(const WheelPrefix& prefix, const Graph& g, int samples,
                                       std::uint64_t seed, std::size_t clique_budget) {
  TaCertificate cert;
  cert.minor = layer_minor_check(prefix, g);
  if (!cert.minor.certificate.pass) {
    throw PreconditionError("layer clique minor check failed; refusing to certify");
  }
  const int t = prefix.num_layers();
  auto clique = clique_number_exact(g, clique_budget);
  cert.layers = t;
  cert.k = clique.size;
  cert.value = (t + cert.k - 1) / cert.k;
  cert.clique.kind = "clique";
  cert.clique.pass = is_clique(g, clique.witness);
  cert.clique.bound = clique.size;
  Json members = Json::array();
  for (Vertex v : clique.witness) members.push_back(id_json(prefix, v));
  cert.clique.data["members"] = std::move(members);

  std::mt19937_64 rng(seed);
  bool all = cert.clique.pass;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    std::vector<Vertex> y;
    for (int layer = 1; layer <= t; ++layer) {
      int pos = 0;
      if (s > 0) {
        std::uniform_int_distribution<int> pick(0, prefix.layer_size(layer) - 1);
        pos = pick(rng);
      }
      y.push_back(static_cast<Vertex>(prefix.index(VertexId{layer, pos})));
    }
    Certificate c = colour_transversal(prefix, g, y, cert.value);
    all = all && c.pass;
    cert.transversals.push_back(std::move(c));
  }
  cert.pass = all;
  return cert;
}

// ------------------------------------------------------- width report

Json WidthReport::to_json() const {
  Json j;
  j["tw_lower"] = {{"value", tw_lower.lower_bound}, {"certificate", tw_lower.certificate.to_json()}};
  j["tw_upper"] = {{"value", extended_json(tw_upper)}, {"source", tw_upper_source}};
  j["ta_lower"] = ta_lower ? Json(*ta_lower) : Json(nullptr);
  j["formula_inputs"] = {{"ell", ell},
                         {"omega", omega},
                         {"F(omega+1)", extended_json(cumulative_at_omega_plus_one)}};
  j["exact_tw"] = exact_tw ? Json(*exact_tw) : Json(nullptr);
  j["decomposition_width"] = decomposition_width ? Json(*decomposition_width) : Json(nullptr);
  j["note"] =
      "formula uses 2F(omega+1), the order the separation argument supports; "
      "the single-F form is reported separately as tw_upper_stated";
  return j;
}

WidthReport width_report(const WheelPrefix& prefix, const Graph& g, std::size_t clique_budget,
                         std::size_t decomposition_limit) {
  WidthReport report;
  report.ell = prefix.ell();
  report.tw_lower = tw_lower_bound_minor(prefix, g);
  report.omega = clique_number_exact(g, clique_budget).size;
  report.cumulative_at_omega_plus_one = cumulative_at(prefix.f(), report.omega + 1);
  report.tw_upper = tw_upper_bound_formula(prefix.ell(), prefix.f(), report.omega);
  report.tw_upper_source = "formula";
  if (g.size() <= decomposition_limit) {
    std::vector<Vertex> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    auto td = decomposition_from_separators(prefix, g, all);
    report.decomposition_width = td.width();
    if (td.width() < report.tw_upper) {
      report.tw_upper = td.width();
      report.tw_upper_source = "decomposition";
    }
  }
  if (g.size() <= kExactTreewidthLimit) {
    report.exact_tw = exact_treewidth_small(g);
    report.tw_upper = *report.exact_tw;
    report.tw_upper_source = "exact";
  }
  if (report.tw_lower.certificate.pass) {
    report.ta_lower = ta_lower_bound_certified(prefix, g, 4, 0, clique_budget).value;
  }
  return report;
}

}  // namespace lwheel
