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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lwheel/demos.hpp"
#include "lwheel/error.hpp"
#include "lwheel/structure.hpp"
#include "support.hpp"

namespace lwheel {
namespace {

using namespace testing;

std::vector<Vertex> all_vertices(const WheelPrefix& p) {
  std::vector<Vertex> v(p.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Vertex idx(const WheelPrefix& p, VertexId v) { return static_cast<Vertex>(p.index(v)); }

// A vertical path with uniformly random child choices.
VerticalPath random_vertical_path(const WheelPrefix& p, VertexId start, int top, std::mt19937_64& rng) {
  VerticalPath path;
  path.vertices.push_back(start);
  while (path.vertices.back().layer < top) {
    auto kids = p.children(path.vertices.back());
    std::uniform_int_distribution<std::size_t> pick(0, kids.size() - 1);
    path.vertices.push_back(kids[pick(rng)]);
    path.augmenting.push_back(0);
  }
  return path;
}

std::vector<Vertex> random_subset(const WheelPrefix& p, std::mt19937_64& rng) {
  std::vector<Vertex> out;
  switch (rng() % 3) {
    case 0: {  // uniform density
      std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.05, 0.9)(rng));
      for (std::size_t v = 0; v < p.num_vertices(); ++v) {
        if (keep(rng)) out.push_back(static_cast<Vertex>(v));
      }
      break;
    }
    case 1: {  // a band of layers
      std::uniform_int_distribution<int> layer(1, p.num_layers());
      int lo = layer(rng), hi = layer(rng);
      if (lo > hi) std::swap(lo, hi);
      for (std::size_t v = 0; v < p.num_vertices(); ++v) {
        int l = p.layer_of(v);
        if (l >= lo && l <= hi && rng() % 4 != 0) out.push_back(static_cast<Vertex>(v));
      }
      break;
    }
    default: {  // low layers only
      const int hi = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, p.num_layers())));
      for (std::size_t v = 0; v < p.num_vertices(); ++v) {
        if (p.layer_of(v) <= hi) out.push_back(static_cast<Vertex>(v));
      }
    }
  }
  if (out.empty()) out.push_back(static_cast<Vertex>(rng() % p.num_vertices()));
  return out;
}

// ------------------------------------------------------------------ holes

TEST(Holes, FloorOnDeskPrefixes) {
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4"}, 2000)) {
    SCOPED_TRACE(c.name());
    Graph g = underlying_graph(build(c));
    if (c.ell > 4) {
      EXPECT_EQ(shortest_hole_up_to(g, c.ell - 1), std::nullopt);
    }
    EXPECT_EQ(shortest_hole_up_to(g, c.ell), c.ell);
  }
}

TEST(Holes, Examples) {
  Graph g5 = underlying_graph(build_prefix(5, SlowFunction::identity(), 3));
  EXPECT_EQ(shortest_hole_up_to(g5, 4), std::nullopt);
  EXPECT_EQ(shortest_hole_up_to(g5, 5), 5);
  EXPECT_EQ(shortest_hole_up_to(underlying_graph(build_first_layer(4)), 10), 4);
  EXPECT_THROW(shortest_hole_up_to(g5, 3), PreconditionError);
}

// ----------------------------------------------------------------- cliques

TEST(Cliques, EqualsSlowFunctionAtTopLayer) {
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4", "table:1,2,3,3,4"}, 2000)) {
    SCOPED_TRACE(c.name());
    auto p = build(c);
    Graph g = underlying_graph(p);
    auto r = clique_number_exact(g);
    EXPECT_TRUE(is_clique(g, r.witness));
    EXPECT_EQ(r.size, c.layers >= 2 ? p.f()(c.layers) : 2);
  }
}

TEST(Cliques, Examples) {
  EXPECT_EQ(clique_number_exact(underlying_graph(build_prefix(4, SlowFunction::capped(3), 4))).size, 3);
  EXPECT_EQ(clique_number_exact(underlying_graph(build_prefix(4, SlowFunction::identity(), 5))).size, 5);
  EXPECT_EQ(clique_number_exact(underlying_graph(build_first_layer(7))).size, 2);
  EXPECT_THROW(clique_number_exact(Graph(10), 9), SolverBudgetError);
}

// ------------------------------------------------------------------- minor

TEST(Minor, PassesOnEveryPrefix) {
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4"}, 5000)) {
    auto p = build(c);
    auto m = layer_minor_check(p, underlying_graph(p));
    EXPECT_TRUE(m.certificate.pass) << c.name();
    EXPECT_EQ(m.lower_bound, c.layers - 1);
    EXPECT_EQ(m.certificate.bound, c.layers - 1);
    EXPECT_EQ(m.certificate.to_json()["kind"], "minor");
  }
}

TEST(Minor, DeletedLayerPairIsReported) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  for (auto [u, v] : g.edges()) {
    int lu = p.layer_of(static_cast<std::size_t>(u)), lv = p.layer_of(static_cast<std::size_t>(v));
    if (std::min(lu, lv) == 1 && std::max(lu, lv) == 3) g.remove_edge(u, v);
  }
  auto m = layer_minor_check(p, g);
  EXPECT_FALSE(m.certificate.pass);
  EXPECT_EQ(m.missing_pair, (std::pair{1, 3}));
  EXPECT_EQ(m.lower_bound, -1);
}

TEST(Minor, BrokenLayerCycleIsReported) {
  auto p = build_prefix(4, SlowFunction::identity(), 3);
  Graph g = underlying_graph(p);
  g.remove_edge(idx(p, {2, 0}), idx(p, {2, 1}));
  g.remove_edge(idx(p, {2, 4}), idx(p, {2, 5}));
  auto m = layer_minor_check(p, g);
  EXPECT_EQ(m.disconnected_layer, 2);
  EXPECT_FALSE(m.certificate.pass);
}

TEST(Minor, RestrictedToSurvivingLayers) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  std::vector<Vertex> kept;
  for (Vertex v : all_vertices(p)) {
    if (p.layer_of(static_cast<std::size_t>(v)) != 2) kept.push_back(v);
  }
  Graph h = induced_subgraph(g, kept);
  std::vector<int> labels;
  for (Vertex v : kept) labels.push_back(p.layer_of(static_cast<std::size_t>(v)));
  auto m = layer_minor_check(h, labels);
  EXPECT_EQ(m.certificate.data["branch_sets"], Json::array({1, 3, 4}));
  // Recompute pairwise adjacency directly.
  auto adjacent_layers = [&](int a, int b) {
    for (auto [u, v] : h.edges()) {
      int lu = labels[static_cast<std::size_t>(u)], lv = labels[static_cast<std::size_t>(v)];
      if ((lu == a && lv == b) || (lu == b && lv == a)) return true;
    }
    return false;
  };
  const bool all = adjacent_layers(1, 3) && adjacent_layers(1, 4) && adjacent_layers(3, 4);
  EXPECT_EQ(m.certificate.pass, all);
  if (all) EXPECT_EQ(m.lower_bound, 2);
}

TEST(Minor, SingleLayer) {
  auto p = build_first_layer(5);
  auto m = layer_minor_check(p, underlying_graph(p));
  EXPECT_TRUE(m.certificate.pass);
  EXPECT_EQ(m.lower_bound, 0);
}

// ---------------------------------------------------------------- chordal

TEST(Chordal, RandomTransversalsHaveHighestLayerFirstPeo) {
  std::mt19937_64 rng(5);
  for (const auto& c : prefix_cases({4, 5}, {"identity", "cap:3", "cap:4"}, 5000)) {
    auto p = build(c);
    Graph g = underlying_graph(p);
    for (int s = 0; s < 100; ++s) {
      std::vector<Vertex> y;
      for (int layer = 1; layer <= p.num_layers(); ++layer) {
        if (rng() % 5 == 0) continue;  // partial transversals too
        y.push_back(idx(p, {layer, static_cast<int>(rng() % static_cast<std::uint64_t>(p.layer_size(layer)))}));
      }
      auto cert = transversal_chordality_check(p, g, y);
      ASSERT_TRUE(cert.pass) << c.name();
      if (!y.empty()) {
        EXPECT_EQ(cert.bound, clique_number_exact(induced_subgraph(g, y)).size);
      }
    }
  }
}

TEST(Chordal, Edges) {
  auto p = build_prefix(4, SlowFunction::identity(), 3);
  Graph g = underlying_graph(p);
  std::vector<Vertex> single{idx(p, {3, 5})};
  EXPECT_TRUE(transversal_chordality_check(p, g, single).pass);
  std::vector<Vertex> same{idx(p, {2, 0}), idx(p, {2, 1})};
  EXPECT_THROW(transversal_chordality_check(p, g, same), PreconditionError);
}

// ---------------------------------------------------------- vertical paths

TEST(VerticalPaths, DisjointAndUpwardContained) {
  std::mt19937_64 rng(6);
  for (const auto& c : prefix_cases({4, 5}, {"identity", "cap:3", "cap:4"}, 3000)) {
    auto p = build(c);
    if (p.num_layers() < 2) continue;
    for (int s = 0; s < 60; ++s) {
      const int layer = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.num_layers() - 1));
      const int n = p.layer_size(layer);
      VertexId a{layer, static_cast<int>(rng() % static_cast<std::uint64_t>(n))};
      VertexId b{layer, static_cast<int>(rng() % static_cast<std::uint64_t>(n))};
      auto pa = random_vertical_path(p, a, p.num_layers(), rng);
      auto pb = random_vertical_path(p, b, p.num_layers(), rng);
      if (a != b) {
        for (auto v : pa.vertices) {
          EXPECT_EQ(std::count(pb.vertices.begin(), pb.vertices.end(), v), 0) << c.name();
        }
      }
      // N^up[p_j] is inside V(P) together with N^up(p_i).
      std::vector<VertexId> allowed = pa.vertices;
      for (auto w : p.record(a).up) allowed.push_back(w);
      for (auto pj : pa.vertices) {
        for (auto w : up_closed_neighborhood(p, pj)) {
          EXPECT_NE(std::find(allowed.begin(), allowed.end(), w), allowed.end()) << c.name();
        }
      }
    }
  }
}

TEST(VerticalPaths, TruncatedAtTargetTopLayer) {
  auto p = build_prefix(4, SlowFunction::identity(), 5);
  Graph g = underlying_graph(p);
  auto x = make_target_set(p, g, {idx(p, {1, 0}), idx(p, {2, 3})});
  EXPECT_EQ(x.max_layer, 2);
  EXPECT_EQ(augmenting_path(p, VertexId{2, 1}, x).vertices.size(), 1u);
  EXPECT_EQ(augmenting_path(p, VertexId{1, 1}, x).vertices.size(), 2u);
}

TEST(Augmenting, ShortRuleFirstChildAlwaysAugmenting) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  std::mt19937_64 rng(8);
  for (int s = 0; s < 20; ++s) {
    auto x = make_target_set(p, g, random_subset(p, rng));
    for (int pos = 0; pos < p.layer_size(2); ++pos) {
      VertexId v{2, pos};  // f(3) - 1 = 2 > |N^up(v)|: short rule
      auto choice = augmenting_child(p, v, x);
      EXPECT_TRUE(choice.augmenting);
      EXPECT_EQ(choice.child.position, p.record(v).children->first);
    }
  }
}

TEST(Augmenting, BlockRuleFallsBackWhenWholeNeighborhoodIsTargeted) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  int checked = 0;
  for (int pos = 0; pos < p.layer_size(3); ++pos) {
    VertexId v{3, pos};
    if (p.record(v).up.size() != 2) continue;
    std::vector<Vertex> members;
    for (auto w : up_closed_neighborhood(p, v)) members.push_back(idx(p, w));
    auto x = make_target_set(p, g, members);
    auto choice = augmenting_child(p, v, x);
    EXPECT_FALSE(choice.augmenting);
    EXPECT_EQ(choice.child, p.children(v).front());
    ++checked;
  }
  EXPECT_EQ(checked, 4);
}

TEST(Augmenting, BlockRuleHasAugmentingChildWhenSlowFunctionHasRoom) {
  // cap:4 with ell=4: block rule at layer 4 -> 5 where f(5) = 4 >= k + 2 for k <= 2.
  auto p = build_prefix(4, SlowFunction::capped(4), 5);
  Graph g = underlying_graph(p);
  std::mt19937_64 rng(9);
  int block_checks = 0;
  for (int s = 0; s < 40; ++s) {
    auto x = make_target_set(p, g, sample_kc_free(g, 3, rng));
    ASSERT_LE(x.k, 2);
    for (int pos = 0; pos < p.layer_size(4); ++pos) {
      VertexId v{4, pos};
      if (p.record(v).up.size() != 3) continue;
      EXPECT_TRUE(augmenting_child(p, v, x).augmenting);
      ++block_checks;
    }
  }
  EXPECT_GT(block_checks, 0);
}

TEST(Augmenting, FullyAugmentingPathsMeetTargetInBoundedSet) {
  std::mt19937_64 rng(10);
  int checked = 0;
  for (const auto& c : prefix_cases({4, 5}, {"identity", "cap:4", "table:1,2,3,3,4,4,4,5"}, 3000)) {
    auto p = build(c);
    Graph g = underlying_graph(p);
    for (int s = 0; s < 10; ++s) {
      auto x = make_target_set(p, g, random_subset(p, rng));
      const Extended big_f = cumulative_at(p.f(), x.k + 1);
      if (!is_finite(big_f)) continue;
      for (int t = 0; t < 10; ++t) {
        const int layer = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.num_layers()));
        VertexId v{layer, static_cast<int>(rng() % static_cast<std::uint64_t>(p.layer_size(layer)))};
        auto path = augmenting_path(p, v, x, p.num_layers());
        if (!std::all_of(path.augmenting.begin(), path.augmenting.end(), [](char a) { return a; })) continue;
        std::vector<Vertex> high;
        int hits = 0;
        for (auto u : path.vertices) {
          if (!x.contains(idx(p, u))) continue;
          ++hits;
          if (u.layer >= big_f) high.push_back(idx(p, u));
        }
        EXPECT_TRUE(is_clique(g, high)) << c.name();
        EXPECT_LE(hits, big_f + x.k - 1) << c.name();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

// ------------------------------------------------------------- separations

TEST(Separations, BuildAbOnRandomPairs) {
  std::mt19937_64 rng(12);
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4"}, 2000)) {
    auto p = build(c);
    Graph g = underlying_graph(p);
    const auto all = all_vertices(p);
    for (int s = 0; s < 100; ++s) {
      const int layer = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.num_layers()));
      const int n = p.layer_size(layer);
      VertexId a{layer, static_cast<int>(rng() % static_cast<std::uint64_t>(n))};
      VertexId b{layer, static_cast<int>(rng() % static_cast<std::uint64_t>(n))};
      auto pp = random_vertical_path(p, a, p.num_layers(), rng);
      // Equal starts are only meaningful for equal paths.
      auto qq = a == b ? pp : random_vertical_path(p, b, p.num_layers(), rng);
      Separation sep = build_ab(p, pp, qq);
      std::vector<Vertex> cover;
      std::set_union(sep.a.begin(), sep.a.end(), sep.b.begin(), sep.b.end(), std::back_inserter(cover));
      ASSERT_EQ(cover, all) << c.name();
      ASSERT_TRUE(verify_separation(g, sep)) << c.name();
      ASSERT_EQ(sep.intersection(), ab_intersection_formula(p, pp, qq)) << c.name();
    }
  }
}

TEST(Separations, EqualEndpoints) {
  auto p = build_prefix(5, SlowFunction::capped(4), 3);
  std::mt19937_64 rng(13);
  auto path = random_vertical_path(p, VertexId{2, 3}, 3, rng);
  Separation sep = build_ab(p, path, path);
  std::vector<Vertex> expected;
  for (auto v : path.vertices) expected.push_back(idx(p, v));
  for (auto v : up_closed_neighborhood(p, VertexId{2, 3})) expected.push_back(idx(p, v));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  EXPECT_EQ(sep.intersection(), expected);
}

TEST(Separations, RejectsMismatchedLayers) {
  auto p = build_prefix(4, SlowFunction::identity(), 3);
  std::mt19937_64 rng(14);
  auto a = random_vertical_path(p, VertexId{1, 0}, 3, rng);
  auto b = random_vertical_path(p, VertexId{2, 0}, 3, rng);
  EXPECT_THROW(build_ab(p, a, b), PreconditionError);
}

TEST(Separations, VerifyExamples) {
  Graph g = cycle(5);
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_TRUE(verify_separation(g, Separation{all, all}));
  EXPECT_FALSE(verify_separation(g, Separation{{0}, {1, 2, 3, 4}}));
  EXPECT_TRUE(verify_separation(g, Separation{{0, 1, 2}, {2, 3, 4, 0}}));
  EXPECT_THROW(verify_separation(g, Separation{{0, 1}, {2, 3}}), PreconditionError);
}

TEST(FairSeparation, InitialPairHoldsThirdOfTarget) {
  std::mt19937_64 rng(15);
  for (const auto& c : prefix_cases({4, 5}, {"identity", "cap:3"}, 2000)) {
    auto p = build(c);
    Graph g = underlying_graph(p);
    for (int s = 0; s < 20; ++s) {
      auto x = make_target_set(p, g, random_subset(p, rng));
      auto fair = fair_separation_initial(p, x);
      EXPECT_GE(3 * fair.sizes.a, x.n());
      EXPECT_LE(forward_segment(p, fair.p.vertices.front(), fair.q.vertices.front()).size(),
                static_cast<std::size_t>(c.ell - 1));
    }
  }
}

TEST(FairSeparation, ForwardOrientationWhenTargetInsideA) {
  auto p = build_prefix(4, SlowFunction::identity(), 3);
  Graph g = underlying_graph(p);
  auto x = make_target_set(p, g, {idx(p, {2, 1}), idx(p, {2, 2})});
  auto fair = fair_separation_initial(p, x);
  EXPECT_FALSE(fair.swapped);
  EXPECT_EQ(fair.sizes.a_only, 2u);
}

// ------------------------------------------------------------- balanced

void check_balanced(const WheelPrefix& p, const Graph& g, const TargetSet& x, const std::string& what) {
  auto sep = balanced_separation(p, x);
  const auto& s = sep.sizes;
  EXPECT_LE(3 * s.a_only, 2 * s.n) << what;
  EXPECT_LE(3 * s.b_only, 2 * s.n) << what;
  EXPECT_TRUE(verify_separation(g, sep.separation, x.members)) << what;
  EXPECT_EQ(sep.order_bound, separation_order_bound(p.f(), p.ell(), x.k));
  if (sep.bound_applies) EXPECT_LE(static_cast<Extended>(s.order), sep.order_bound) << what;
}

TEST(Balanced, FullAndRandomTargets) {
  std::mt19937_64 rng(16);
  for (const auto& c : prefix_cases({4, 5}, {"identity", "cap:3", "cap:4"}, 3000)) {
    auto p = build(c);
    Graph g = underlying_graph(p);
    check_balanced(p, g, make_target_set(p, g, all_vertices(p)), c.name() + " all");
    for (int s = 0; s < 50; ++s) {
      check_balanced(p, g, make_target_set(p, g, random_subset(p, rng)), c.name() + " sample");
    }
  }
}

TEST(Balanced, SmallTargetsAreTrivial) {
  auto p = build_prefix(4, SlowFunction::identity(), 4);
  Graph g = underlying_graph(p);
  auto x = make_target_set(p, g, {idx(p, {1, 0})});
  auto sep = balanced_separation(p, x);
  EXPECT_EQ(sep.separation.a, x.members);
  EXPECT_EQ(sep.separation.b, x.members);
  auto y = make_target_set(p, g, {idx(p, {1, 0}), idx(p, {3, 4}), idx(p, {4, 7})});
  EXPECT_EQ(balanced_separation(p, y).sizes.order, 3u);
  EXPECT_THROW(balanced_separation(p, make_target_set(p, g, {})), PreconditionError);
}

TEST(Balanced, SixtyEightVertexExample) {
  auto p = build_prefix(4, SlowFunction::parse("table:1,2,3,3,4,5"), 4);
  ASSERT_EQ(p.num_vertices(), 68u);
  Graph g = underlying_graph(p);
  auto x = make_target_set(p, g, all_vertices(p));
  EXPECT_EQ(x.k, 3);
  auto sep = balanced_separation(p, x);
  // F(4) = 5 for this table.
  EXPECT_EQ(sep.order_bound, 2 * 5 + 5 * 3 - 2);
  EXPECT_LE(sep.sizes.order, 21u);
  EXPECT_LE(3 * sep.sizes.a_only, 2 * 68u);
  EXPECT_LE(3 * sep.sizes.b_only, 2 * 68u);
}

TEST(Balanced, OrderBoundFormula) {
  EXPECT_EQ(separation_order_bound(SlowFunction::identity(), 5, 3), 2 * 4 + 18 - 2);
  EXPECT_EQ(separation_order_bound(SlowFunction::capped(3), 4, 3), kInfinity);
  EXPECT_EQ(separation_order_bound(SlowFunction::capped(3), 5, 1), 2 * 2 + 6 - 2);
  EXPECT_EQ(separation_order_bound(SlowFunction::capped(4), 5, 2), 2 * 3 + 12 - 2);
}

}  // namespace
}  // namespace lwheel
