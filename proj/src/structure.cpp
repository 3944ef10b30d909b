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

#include "lwheel/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "lwheel/error.hpp"

namespace lwheel {

namespace {

Json vertex_json(const WheelPrefix& prefix, Vertex v) {
  VertexId id = prefix.id(static_cast<std::size_t>(v));
  return Json::array({id.layer, id.position});
}

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool in_sorted(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Offset of x from p along the directed cycle of a layer of size n.
int cyclic_offset(int n, int p, int x) { return ((x - p) % n + n) % n; }

}  // namespace

// ------------------------------------------------------------ exact solvers

std::optional<int> shortest_hole_up_to(const Graph& g, int bound) {
  if (bound < 4) throw PreconditionError("hole bound must be >= 4");
  return kernels::parallel::shortest_hole(g, bound);
}

kernels::CliqueResult clique_number_exact(const Graph& g, std::size_t budget) {
  if (g.size() > budget) {
    throw SolverBudgetError("clique solver budget is " + std::to_string(budget) +
                            " vertices, graph has " + std::to_string(g.size()));
  }
  return kernels::parallel::max_clique(g);
}

kernels::IndependentSetResult max_independent_set_exact(const Graph& g, std::size_t budget) {
  if (g.size() > budget) {
    throw SolverBudgetError("independent set solver budget is " + std::to_string(budget) +
                            " vertices, graph has " + std::to_string(g.size()));
  }
  return kernels::max_independent_set(g);
}

// ---------------------------------------------------------- target sets

TargetSet make_target_set(const WheelPrefix& prefix, const Graph& g, std::vector<Vertex> members,
                          std::size_t clique_budget) {
  TargetSet x;
  sort_unique(members);
  x.mask.assign(prefix.num_vertices(), 0);
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= prefix.num_vertices()) {
      throw PreconditionError("target vertex " + std::to_string(v) + " is not in the prefix");
    }
    x.mask[static_cast<std::size_t>(v)] = 1;
    x.max_layer = std::max(x.max_layer, prefix.layer_of(static_cast<std::size_t>(v)));
  }
  x.members = std::move(members);
  if (!x.members.empty()) {
    x.k = clique_number_exact(induced_subgraph(g, x.members), clique_budget).size;
  }
  return x;
}

// ------------------------------------------------------ layer clique minor

MinorCheck layer_minor_check(const Graph& g, std::span<const int> labels) {
  MinorCheck result;
  result.certificate.kind = "minor";
  std::set<int> present(labels.begin(), labels.end());
  std::vector<int> layers(present.begin(), present.end());
  std::map<int, std::size_t> slot;
  for (std::size_t s = 0; s < layers.size(); ++s) slot[layers[s]] = s;

  Json data;
  data["branch_sets"] = layers;

  // Each branch set must induce a connected subgraph.
  std::vector<char> seen(g.size(), 0);
  for (int layer : layers) {
    Vertex root = -1;
    std::size_t members = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (labels[v] != layer) continue;
      ++members;
      if (root == -1) root = static_cast<Vertex>(v);
    }
    std::size_t reached = 0;
    std::queue<Vertex> todo;
    todo.push(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!todo.empty()) {
      Vertex v = todo.front();
      todo.pop();
      ++reached;
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (labels[wi] == layer && !seen[wi]) {
          seen[wi] = 1;
          todo.push(w);
        }
      }
    }
    if (reached != members && !result.disconnected_layer) result.disconnected_layer = layer;
  }

  // One witness edge per pair of branch sets.
  const std::size_t s = layers.size();
  std::vector<std::pair<Vertex, Vertex>> witness(s * s, {-1, -1});
  for (auto [u, v] : g.edges()) {
    int lu = labels[static_cast<std::size_t>(u)];
    int lv = labels[static_cast<std::size_t>(v)];
    if (lu == lv) continue;
    std::size_t a = slot[std::min(lu, lv)];
    std::size_t b = slot[std::max(lu, lv)];
    auto& w = witness[a * s + b];
    if (w.first == -1) w = lu < lv ? std::pair{u, v} : std::pair{v, u};
  }
  Json edges = Json::array();
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      auto w = witness[a * s + b];
      if (w.first == -1) {
        if (!result.missing_pair) result.missing_pair = std::pair{layers[a], layers[b]};
        continue;
      }
      edges.push_back({{"pair", {layers[a], layers[b]}}, {"edge", {w.first, w.second}}});
    }
  }
  data["edges"] = std::move(edges);
  if (result.missing_pair) {
    data["missing_pair"] = {result.missing_pair->first, result.missing_pair->second};
  }
  if (result.disconnected_layer) data["disconnected_layer"] = *result.disconnected_layer;

  result.certificate.pass = !result.missing_pair && !result.disconnected_layer;
  result.lower_bound = result.certificate.pass ? static_cast<int>(s) - 1 : -1;
  result.certificate.bound = result.lower_bound;
  result.certificate.data = std::move(data);
  return result;
}

MinorCheck layer_minor_check(const WheelPrefix& prefix, const Graph& g) {
  auto labels = layer_labels(prefix);
  return layer_minor_check(g, labels);
}

// ---------------------------------------------------- chordal transversals

Certificate transversal_chordality_check(const WheelPrefix& prefix, const Graph& g,
                                         std::span<const Vertex> transversal) {
  std::vector<Vertex> order(transversal.begin(), transversal.end());
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return prefix.layer_of(static_cast<std::size_t>(a)) > prefix.layer_of(static_cast<std::size_t>(b));
  });
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (prefix.layer_of(static_cast<std::size_t>(order[j])) ==
        prefix.layer_of(static_cast<std::size_t>(order[j - 1]))) {
      throw PreconditionError("transversal has two vertices in layer " +
                              std::to_string(prefix.layer_of(static_cast<std::size_t>(order[j]))));
    }
  }

  Certificate cert;
  cert.kind = "peo";
  cert.pass = true;
  Json elimination = Json::array();
  int omega = order.empty() ? 0 : 1;
  for (std::size_t j = 0; j < order.size(); ++j) {
    elimination.push_back(vertex_json(prefix, order[j]));
    std::vector<Vertex> later;
    for (std::size_t r = j + 1; r < order.size(); ++r) {
      if (g.adjacent(order[j], order[r])) later.push_back(order[r]);
    }
    if (!is_clique(g, later)) {
      cert.pass = false;
      cert.data["first_non_simplicial"] = vertex_json(prefix, order[j]);
      break;
    }
    omega = std::max(omega, static_cast<int>(later.size()) + 1);
  }
  cert.data["order"] = std::move(elimination);
  cert.bound = cert.pass ? omega : -1;
  return cert;
}

// ------------------------------------------------------- vertical paths

namespace {

std::vector<VertexId> filtered(const std::vector<VertexId>& set, const WheelPrefix& prefix,
                               const TargetSet& x) {
  std::vector<VertexId> out;
  for (VertexId w : set) {
    if (x.contains(static_cast<Vertex>(prefix.index(w)))) out.push_back(w);
  }
  return out;
}

}  // namespace

bool is_augmenting_arc(const WheelPrefix& prefix, VertexId v, VertexId u, const TargetSet& x) {
  const auto& child = prefix.record(u);
  if (!child.parent || *child.parent != v) return false;
  // Both lists are sorted by layer, so equal sets compare equal as vectors.
  return filtered(child.up, prefix, x) == filtered(up_closed_neighborhood(prefix, v), prefix, x);
}

ChildChoice augmenting_child(const WheelPrefix& prefix, VertexId v, const TargetSet& x) {
  if (v.layer >= prefix.num_layers()) {
    throw PreconditionError("vertex in the top layer has no children in the prefix");
  }
  auto children = prefix.children(v);
  if (children.empty()) throw ConstructionError("vertex without a child");
  for (VertexId u : children) {
    if (is_augmenting_arc(prefix, v, u, x)) return {u, true};
  }
  return {children.front(), false};
}

VerticalPath augmenting_path(const WheelPrefix& prefix, VertexId v, const TargetSet& x,
                             int truncation_layer) {
  prefix.index(v);  // validates v
  VerticalPath path;
  path.vertices.push_back(v);
  const int top = std::min(truncation_layer, prefix.num_layers());
  while (path.vertices.back().layer < top) {
    ChildChoice next = augmenting_child(prefix, path.vertices.back(), x);
    path.vertices.push_back(next.child);
    path.augmenting.push_back(next.augmenting ? 1 : 0);
  }
  return path;
}

VerticalPath augmenting_path(const WheelPrefix& prefix, VertexId v, const TargetSet& x) {
  return augmenting_path(prefix, v, x, std::min(x.max_layer, prefix.num_layers()));
}

// ----------------------------------------------------------- separations

std::vector<Vertex> Separation::intersection() const {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SeparationSizes sizes_relative_to(const Separation& sep, std::span<const Vertex> x) {
  SeparationSizes s;
  s.n = x.size();
  for (Vertex v : x) {
    bool in_a = in_sorted(sep.a, v);
    bool in_b = in_sorted(sep.b, v);
    s.a += in_a;
    s.b += in_b;
    s.a_only += in_a && !in_b;
    s.b_only += in_b && !in_a;
    s.order += in_a && in_b;
  }
  return s;
}

std::vector<VertexId> forward_segment(const WheelPrefix& prefix, VertexId p, VertexId q) {
  if (p.layer != q.layer) throw PreconditionError("segment endpoints in different layers");
  const int n = prefix.layer_size(p.layer);
  std::vector<VertexId> out;
  for (int d = 0; d <= cyclic_offset(n, p.position, q.position); ++d) {
    out.push_back({p.layer, (p.position + d) % n});
  }
  return out;
}

namespace {

void check_pair(const VerticalPath& p, const VerticalPath& q) {
  if (p.vertices.empty() || q.vertices.empty()) throw PreconditionError("empty vertical path");
  if (p.start_layer() != q.start_layer()) {
    throw PreconditionError("vertical paths start in different layers");
  }
  if (p.end_layer() != q.end_layer()) {
    throw PreconditionError("vertical paths are truncated at different layers");
  }
}

std::vector<Vertex> base_neighborhoods(const WheelPrefix& prefix, const VerticalPath& p,
                                       const VerticalPath& q) {
  std::vector<Vertex> out;
  for (VertexId u : forward_segment(prefix, p.vertices.front(), q.vertices.front())) {
    for (VertexId w : up_closed_neighborhood(prefix, u)) out.push_back(static_cast<Vertex>(prefix.index(w)));
  }
  sort_unique(out);
  return out;
}

// Membership of single vertices in A(P,Q) and B(P,Q) without building them.
class PairClassifier {
 public:
  PairClassifier(const WheelPrefix& prefix, const VerticalPath& p, const VerticalPath& q)
      : prefix_(prefix), p_(p), q_(q), base_(base_neighborhoods(prefix, p, q)) {
    check_pair(p, q);
  }

  std::pair<bool, bool> classify(Vertex v) const {
    const VertexId id = prefix_.id(static_cast<std::size_t>(v));
    const int i = p_.start_layer();
    if (id.layer <= i) return {in_sorted(base_, v), true};
    if (id.layer > p_.end_layer()) {
      throw PreconditionError("vertex above the truncation layer of the vertical paths");
    }
    const VertexId pj = p_.at_layer(id.layer);
    const VertexId qj = q_.at_layer(id.layer);
    const int n = prefix_.layer_size(id.layer);
    const bool forward =
        cyclic_offset(n, pj.position, id.position) <= cyclic_offset(n, pj.position, qj.position);
    return {forward, !forward || id == pj || id == qj};
  }

  SeparationSizes sizes(const TargetSet& x) const {
    SeparationSizes s;
    s.n = x.n();
    for (Vertex v : x.members) {
      auto [in_a, in_b] = classify(v);
      s.a += in_a;
      s.b += in_b;
      s.a_only += in_a && !in_b;
      s.b_only += in_b && !in_a;
      s.order += in_a && in_b;
    }
    return s;
  }

  Separation restricted(const TargetSet& x) const {
    Separation sep;
    for (Vertex v : x.members) {
      auto [in_a, in_b] = classify(v);
      if (in_a) sep.a.push_back(v);
      if (in_b) sep.b.push_back(v);
    }
    return sep;
  }

 private:
  const WheelPrefix& prefix_;
  const VerticalPath& p_;
  const VerticalPath& q_;
  std::vector<Vertex> base_;
};

}  // namespace

Separation build_ab(const WheelPrefix& prefix, const VerticalPath& p, const VerticalPath& q) {
  check_pair(p, q);
  const int i = p.start_layer();
  const int m = p.end_layer();
  Separation sep;
  sep.a = base_neighborhoods(prefix, p, q);
  for (std::size_t v = 0; v < prefix.layer_offset(i) + static_cast<std::size_t>(prefix.layer_size(i)); ++v) {
    sep.b.push_back(static_cast<Vertex>(v));
  }
  for (int j = i + 1; j <= m; ++j) {
    const VertexId pj = p.at_layer(j);
    const VertexId qj = q.at_layer(j);
    std::vector<char> forward(static_cast<std::size_t>(prefix.layer_size(j)), 0);
    for (VertexId u : forward_segment(prefix, pj, qj)) {
      forward[static_cast<std::size_t>(u.position)] = 1;
      sep.a.push_back(static_cast<Vertex>(prefix.index(u)));
    }
    for (int pos = 0; pos < prefix.layer_size(j); ++pos) {
      VertexId u{j, pos};
      if (!forward[static_cast<std::size_t>(pos)] || u == pj || u == qj) {
        sep.b.push_back(static_cast<Vertex>(prefix.index(u)));
      }
    }
  }
  sort_unique(sep.a);
  sort_unique(sep.b);
  return sep;
}

std::vector<Vertex> ab_intersection_formula(const WheelPrefix& prefix, const VerticalPath& p,
                                            const VerticalPath& q) {
  check_pair(p, q);
  std::vector<Vertex> out = base_neighborhoods(prefix, p, q);
  for (const auto* path : {&p, &q}) {
    for (VertexId u : path->vertices) out.push_back(static_cast<Vertex>(prefix.index(u)));
  }
  sort_unique(out);
  return out;
}

bool verify_separation(const Graph& g, const Separation& sep, std::span<const Vertex> domain) {
  std::vector<char> in_domain(g.size(), 0);
  std::vector<char> in_a(g.size(), 0);
  std::vector<char> in_b(g.size(), 0);
  for (Vertex v : domain) in_domain[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : sep.a) in_a[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : sep.b) in_b[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : domain) {
    auto vi = static_cast<std::size_t>(v);
    if (!in_a[vi] && !in_b[vi]) {
      throw PreconditionError("separation does not cover vertex " + std::to_string(v));
    }
  }
  for (Vertex v : domain) {
    auto vi = static_cast<std::size_t>(v);
    if (!in_a[vi] || in_b[vi]) continue;
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (in_domain[wi] && in_b[wi] && !in_a[wi]) return false;
    }
  }
  return true;
}

bool verify_separation(const Graph& g, const Separation& sep) {
  std::vector<Vertex> all(g.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
  return verify_separation(g, sep, all);
}

FairSeparation fair_separation_initial(const WheelPrefix& prefix, const TargetSet& x) {
  if (x.n() == 0) throw PreconditionError("target set is empty");
  const int m = std::min(x.max_layer, prefix.num_layers());
  VerticalPath p = augmenting_path(prefix, VertexId{1, 0}, x, m);
  VerticalPath q = augmenting_path(prefix, VertexId{1, 2}, x, m);

  FairSeparation fair;
  auto forward = PairClassifier(prefix, p, q).sizes(x);
  if (3 * forward.a >= x.n()) {
    fair.p = std::move(p);
    fair.q = std::move(q);
    fair.sizes = forward;
    return fair;
  }
  auto backward = PairClassifier(prefix, q, p).sizes(x);
  if (3 * backward.a < x.n()) {
    throw ProgressError("neither orientation of the initial pair holds n/3 target vertices");
  }
  fair.p = std::move(q);
  fair.q = std::move(p);
  fair.swapped = true;
  fair.sizes = backward;
  return fair;
}

Extended separation_order_bound(const SlowFunction& f, int ell, int k) {
  Extended big_f = cumulative_at(f, k + 1);
  if (!is_finite(big_f)) return kInfinity;
  return 2 * big_f + static_cast<Extended>(ell + 1) * k - 2;
}

namespace {

VerticalPath drop_first(const VerticalPath& path) {
  VerticalPath out;
  out.vertices.assign(path.vertices.begin() + 1, path.vertices.end());
  out.augmenting.assign(path.augmenting.begin() + 1, path.augmenting.end());
  return out;
}

bool tail_augmenting(const VerticalPath& path) {
  return path.augmenting.size() <= 1 ||
         std::all_of(path.augmenting.begin() + 1, path.augmenting.end(), [](char c) { return c != 0; });
}

}  // namespace

BalancedSeparation balanced_separation(const WheelPrefix& prefix, const TargetSet& x) {
  if (x.n() == 0) throw PreconditionError("target set is empty");
  BalancedSeparation result;
  result.k = x.k;
  result.order_bound = separation_order_bound(prefix.f(), prefix.ell(), x.k);
  result.bound_applies = is_finite(result.order_bound);

  const std::size_t n = x.n();
  if (n <= 5) {
    result.separation = {x.members, x.members};
    result.sizes = sizes_relative_to(result.separation, x.members);
    result.tails_augmenting = true;
    return result;
  }

  const int m = std::min(x.max_layer, prefix.num_layers());
  FairSeparation fair = fair_separation_initial(prefix, x);
  VerticalPath p = std::move(fair.p);
  VerticalPath q = std::move(fair.q);

  auto segment_length = [&](const VerticalPath& a, const VerticalPath& b) -> std::size_t {
    const int i = a.start_layer();
    if (i >= m) return 0;
    return forward_segment(prefix, a.at_layer(i + 1), b.at_layer(i + 1)).size();
  };

  while (true) {
    SeparationSizes sizes = PairClassifier(prefix, p, q).sizes(x);
    if (3 * sizes.a_only <= 2 * n) break;
    const int i = p.start_layer();
    if (i >= m) throw ProgressError("A side is not balanced at the truncation layer");

    const auto segment = forward_segment(prefix, p.at_layer(i + 1), q.at_layer(i + 1));
    std::optional<VertexId> with_parent;
    for (std::size_t j = 1; j + 1 < segment.size(); ++j) {
      if (prefix.record(segment[j]).parent) {
        with_parent = segment[j];
        break;
      }
    }

    const auto before = std::pair{i, segment.size()};
    if (!with_parent) {
      p = drop_first(p);
      q = drop_first(q);
    } else {
      const VertexId u = *with_parent;
      const VertexId v = *prefix.record(u).parent;
      VerticalPath r = augmenting_path(prefix, u, x, m);
      r.vertices.insert(r.vertices.begin(), v);
      r.augmenting.insert(r.augmenting.begin(), is_augmenting_arc(prefix, v, u, x) ? 1 : 0);

      if (3 * PairClassifier(prefix, p, r).sizes(x).a >= n) {
        q = std::move(r);
      } else if (3 * PairClassifier(prefix, r, q).sizes(x).a >= n) {
        p = std::move(r);
      } else {
        throw ProgressError("neither refined pair keeps n/3 target vertices on the A side");
      }
    }
    const auto after = std::pair{p.start_layer(), segment_length(p, q)};
    if (!(after.first > before.first ||
          (after.first == before.first && after.second < before.second))) {
      throw ProgressError("separation loop made no progress at layer " + std::to_string(i));
    }
    ++result.iterations;
  }

  PairClassifier final_pair(prefix, p, q);
  result.separation = final_pair.restricted(x);
  result.sizes = final_pair.sizes(x);
  result.final_layer = p.start_layer();
  result.tails_augmenting = tail_augmenting(p) && tail_augmenting(q);
  result.p = std::move(p);
  result.q = std::move(q);
  return result;
}

}  // namespace lwheel
