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

#include "lwheel/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lwheel/error.hpp"

namespace lwheel {

namespace {

class Layout {
 public:
  explicit Layout(const std::vector<int>& sizes) : sizes_(sizes) {
    offsets_.resize(sizes.size());
    std::exclusive_scan(sizes.begin(), sizes.end(), offsets_.begin(), 0);
    total_ = std::accumulate(sizes.begin(), sizes.end(), 0);
  }

  int total() const { return total_; }
  int layers() const { return static_cast<int>(sizes_.size()); }
  int size(int layer) const { return sizes_[static_cast<std::size_t>(layer - 1)]; }
  int offset(int layer) const { return offsets_[static_cast<std::size_t>(layer - 1)]; }
  VertexId id(int v) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
    int layer = static_cast<int>(it - offsets_.begin());
    return {layer, v - offset(layer)};
  }
  int layer(int v) const { return id(v).layer; }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

RuleCheck fail(std::string rule, std::optional<VertexId> v, std::string detail) {
  return {std::move(rule), false, v, std::move(detail)};
}

std::string name(VertexId v) {
  return "(" + std::to_string(v.layer) + "," + std::to_string(v.position) + ")";
}

RuleCheck check_partition(const LayeredDigraph& g, const Layout& layout) {
  for (std::size_t i = 0; i < g.layer_sizes.size(); ++i) {
    if (g.layer_sizes[i] < 1) {
      return fail("rule1", std::nullopt, "layer " + std::to_string(i + 1) + " is empty");
    }
  }
  for (Arc a : g.arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= layout.total() || a.head >= layout.total()) {
      return fail("rule1", std::nullopt, "arc endpoint outside every layer");
    }
    if (a.tail == a.head) return fail("rule1", layout.id(a.tail), "self-loop");
  }
  return {"rule1", true, std::nullopt, {}};
}

RuleCheck check_layer_cycles(const LayeredDigraph& g, const Layout& layout) {
  // Within-layer arcs must be exactly p -> p+1 (mod size) for every p.
  std::vector<std::vector<int>> out(static_cast<std::size_t>(layout.total()));
  for (Arc a : g.arcs) {
    if (layout.layer(a.tail) == layout.layer(a.head)) {
      out[static_cast<std::size_t>(a.tail)].push_back(a.head);
    }
  }
  for (int layer = 1; layer <= layout.layers(); ++layer) {
    const int n = layout.size(layer);
    const int base = layout.offset(layer);
    if (n < g.ell) {
      return fail("rule2", VertexId{layer, 0},
                  "layer " + std::to_string(layer) + " has length " + std::to_string(n) +
                      " < ell");
    }
    for (int p = 0; p < n; ++p) {
      const auto& succ = out[static_cast<std::size_t>(base + p)];
      if (succ.size() != 1 || succ[0] != base + (p + 1) % n) {
        return fail("rule2", VertexId{layer, p},
                    "layer arcs out of " + name({layer, p}) + " do not follow the cycle");
      }
    }
  }
  return {"rule2", true, std::nullopt, {}};
}

RuleCheck check_orientation(const Layout& layout, const std::vector<Arc>& arcs) {
  for (Arc a : arcs) {
    if (layout.layer(a.tail) > layout.layer(a.head)) {
      return fail("rule3", layout.id(a.head), "cross-layer arc oriented downward");
    }
  }
  return {"rule3", true, std::nullopt, {}};
}

RuleCheck check_children(const Layout& layout, const std::vector<std::vector<int>>& in) {
  for (int layer = 1; layer < layout.layers(); ++layer) {
    const int next = layer + 1;
    const int n = layout.size(next);
    int owner = -1;  // position in `layer` whose path L(owner) we are inside
    for (int p = 0; p < n; ++p) {
      const int u = layout.offset(next) + p;
      int parent = -1;
      for (int w : in[static_cast<std::size_t>(u)]) {
        if (layout.layer(w) != layer) continue;
        if (parent != -1) return fail("rule4", VertexId{next, p}, "vertex has two parents");
        parent = w - layout.offset(layer);
      }
      if (p == 0 && parent != 0) {
        return fail("rule4", VertexId{next, 0},
                    "first vertex of a layer is not the first child of position 0");
      }
      if (parent == -1 || parent == owner) continue;
      if (parent != owner + 1) {
        VertexId culprit{layer, owner + 1};
        return fail("rule4", culprit,
                    "children out of cyclic order or " + name(culprit) + " has no child");
      }
      owner = parent;
    }
    if (owner != layout.size(layer) - 1) {
      return fail("rule4", VertexId{layer, owner + 1}, "vertex without a child");
    }
  }
  return {"rule4", true, std::nullopt, {}};
}

RuleCheck check_up_cliques(const LayeredDigraph& g, const Layout& layout,
                           const std::vector<std::vector<int>>& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Arc a : g.arcs) edges.emplace_back(a.tail, a.head);
  Graph undirected(static_cast<std::size_t>(layout.total()), edges);
  for (int v = 0; v < layout.total(); ++v) {
    const int layer = layout.layer(v);
    std::vector<int> up;
    for (int w : in[static_cast<std::size_t>(v)]) {
      if (layout.layer(w) < layer) up.push_back(w);
    }
    if (static_cast<int>(up.size()) > g.f(layer) - 1) {
      return fail("rule5", layout.id(v), "more than f(i)-1 upward neighbors");
    }
    std::vector<int> layers;
    for (int w : up) layers.push_back(layout.layer(w));
    std::sort(layers.begin(), layers.end());
    if (std::adjacent_find(layers.begin(), layers.end()) != layers.end()) {
      return fail("rule5", layout.id(v), "two upward neighbors in the same layer");
    }
    if (!is_clique(undirected, up)) {
      return fail("rule5", layout.id(v), "upward neighbors are not a clique");
    }
  }
  return {"rule5", true, std::nullopt, {}};
}

RuleCheck check_construction(const LayeredDigraph& g, const Layout& layout) {
  WheelPrefix expected = [&] {
    try {
      return build_prefix(g.ell, g.f, layout.layers(), std::max<std::int64_t>(layout.total(), g.ell));
    } catch (const Error&) {
      return build_first_layer(g.ell, g.f);
    }
  }();
  if (std::vector<int>(expected.layer_sizes().begin(), expected.layer_sizes().end()) !=
      g.layer_sizes) {
    for (int layer = 1; layer <= layout.layers(); ++layer) {
      if (layer > expected.num_layers() || expected.layer_size(layer) != layout.size(layer)) {
        return fail("rules6-7", VertexId{layer, 0}, "layer size differs from the construction");
      }
    }
  }
  auto want = materialize_arcs(expected);
  auto have = g.arcs;
  std::sort(want.begin(), want.end(), [](Arc a, Arc b) {
    return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
  });
  std::sort(have.begin(), have.end(), [](Arc a, Arc b) {
    return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
  });
  auto [wi, hi] = std::mismatch(want.begin(), want.end(), have.begin(), have.end());
  if (wi != want.end() || hi != have.end()) {
    int v = wi == want.end() ? hi->head : (hi == have.end() ? wi->head : std::min(wi->head, hi->head));
    return fail("rules6-7", layout.id(v), "arcs into " + name(layout.id(v)) +
                                               " differ from the construction");
  }
  return {"rules6-7", true, std::nullopt, {}};
}

void merge(RuleCheck& into, const RuleCheck& extra) {
  if (into.pass && !extra.pass) into = extra;
}

}  // namespace

bool RuleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RuleCheck& c) { return c.pass; });
}

const RuleCheck& RuleReport::operator[](const std::string& rule) const {
  for (const auto& c : checks) {
    if (c.rule == rule) return c;
  }
  throw PreconditionError("no check named " + rule);
}

LayeredDigraph to_digraph(const WheelPrefix& prefix) {
  LayeredDigraph g;
  g.ell = prefix.ell();
  g.f = prefix.f();
  g.layer_sizes.assign(prefix.layer_sizes().begin(), prefix.layer_sizes().end());
  g.arcs = materialize_arcs(prefix);
  return g;
}

RuleReport verify_rules(const LayeredDigraph& g) {
  RuleReport report;
  Layout layout(g.layer_sizes);
  report.checks.push_back(check_partition(g, layout));
  if (!report.checks.back().pass) {
    for (const char* rule : {"rule2", "rule3", "rule4", "rule5", "rules6-7"}) {
      report.checks.push_back(fail(rule, std::nullopt, "skipped: vertex partition is broken"));
    }
    return report;
  }
  std::vector<std::vector<int>> in(static_cast<std::size_t>(layout.total()));
  for (Arc a : g.arcs) in[static_cast<std::size_t>(a.head)].push_back(a.tail);

  report.checks.push_back(check_layer_cycles(g, layout));
  report.checks.push_back(check_orientation(layout, g.arcs));
  report.checks.push_back(check_children(layout, in));
  report.checks.push_back(check_up_cliques(g, layout, in));
  report.checks.push_back(check_construction(g, layout));
  return report;
}

RuleReport verify_rules(const WheelPrefix& prefix) {
  RuleReport report = verify_rules(to_digraph(prefix));
  auto find = [&](const char* rule) -> RuleCheck& {
    for (auto& c : report.checks) {
      if (c.rule == rule) return c;
    }
    throw PreconditionError(rule);
  };

  const int ell = prefix.ell();
  for (std::size_t vi = 0; vi < prefix.num_vertices(); ++vi) {
    const VertexRecord& rec = prefix.record(vi);
    const VertexId v = rec.id;

    std::optional<VertexId> below;
    for (std::size_t j = 0; j < rec.up.size(); ++j) {
      if (j > 0 && rec.up[j - 1].layer >= rec.up[j].layer) {
        merge(find("rule5"), fail("rule5", v, "upward neighbors not sorted by layer"));
      }
      if (rec.up[j].layer == v.layer - 1) below = rec.up[j];
    }
    if (rec.parent != below) {
      merge(find("rule4"), fail("rule4", v, "parent field disagrees with the arcs"));
    }

    if (v.layer == prefix.num_layers()) {
      if (rec.children) merge(find("rule4"), fail("rule4", v, "top-layer vertex has a child span"));
      continue;
    }
    if (!rec.children) {
      merge(find("rule4"), fail("rule4", v, "missing child span"));
      continue;
    }
    const ChildSpan span = *rec.children;
    const int expected_first =
        v.position == 0 ? 0
                        : [&] {
                            const auto& prev = prefix.record(VertexId{v.layer, v.position - 1});
                            return prev.children ? prev.children->first + prev.children->length : -1;
                          }();
    if (span.first != expected_first) {
      merge(find("rule4"), fail("rule4", v, "child spans do not tile the next layer"));
    }
    if (v.position == prefix.layer_size(v.layer) - 1 &&
        span.first + span.length != prefix.layer_size(v.layer + 1)) {
      merge(find("rule4"), fail("rule4", v, "child spans do not cover the next layer"));
    }
    const int threshold = prefix.f()(v.layer + 1) - 1;
    const int expected_len = static_cast<int>(rec.up.size()) < threshold ? ell - 2 : threshold * (ell - 2);
    if (span.length != ell - 2 && span.length != threshold * (ell - 2)) {
      merge(find("rules6-7"), fail("rules6-7", v, "child path length is neither ell-2 nor (f(i+1)-1)(ell-2)"));
    } else if (span.length != expected_len) {
      merge(find("rules6-7"), fail("rules6-7", v, "child path length does not match the branch rule"));
    }
  }
  return report;
}

}  // namespace lwheel
