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

#include "lwheel/error.hpp"
#include "lwheel/verify.hpp"
#include "support.hpp"

namespace lwheel {
namespace {

using testing::prefix_cases;

Arc find_arc(const LayeredDigraph& g, Vertex tail, Vertex head) {
  auto it = std::find(g.arcs.begin(), g.arcs.end(), Arc{tail, head});
  EXPECT_NE(it, g.arcs.end());
  return *it;
}

void erase_arc(LayeredDigraph& g, Arc a) { g.arcs.erase(std::find(g.arcs.begin(), g.arcs.end(), a)); }

TEST(VerifyRules, BuiltPrefixesPass) {
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4"}, 3000)) {
    SCOPED_TRACE(c.name());
    auto p = testing::build(c);
    auto report = verify_rules(p);
    for (const auto& check : report.checks) EXPECT_TRUE(check.pass) << check.rule << ": " << check.detail;
    EXPECT_EQ(report.checks.size(), 6u);
    EXPECT_TRUE(verify_rules(to_digraph(p)).all_pass());
  }
}

class Mutation : public ::testing::Test {
 protected:
  WheelPrefix prefix = build_prefix(4, SlowFunction::capped(3), 4);
  LayeredDigraph graph = to_digraph(prefix);
  Vertex at(int layer, int pos) const { return static_cast<Vertex>(prefix.index(VertexId{layer, pos})); }
};

TEST_F(Mutation, DeletedCycleArcBreaksRule2) {
  erase_arc(graph, find_arc(graph, at(2, 3), at(2, 4)));
  auto report = verify_rules(graph);
  EXPECT_FALSE(report["rule2"].pass);
  EXPECT_EQ(report["rule2"].first_violation, (VertexId{2, 3}));
}

TEST_F(Mutation, ChordInsideLayerBreaksRule2) {
  graph.arcs.push_back({at(3, 0), at(3, 5)});
  EXPECT_FALSE(verify_rules(graph)["rule2"].pass);
}

TEST_F(Mutation, ReversedCycleArcBreaksRule2) {
  erase_arc(graph, find_arc(graph, at(1, 0), at(1, 1)));
  graph.arcs.push_back({at(1, 1), at(1, 0)});
  EXPECT_FALSE(verify_rules(graph)["rule2"].pass);
}

TEST_F(Mutation, DownwardArcBreaksRule3) {
  const Vertex child = at(2, 0);
  const Vertex parent = at(1, 0);
  erase_arc(graph, find_arc(graph, parent, child));
  graph.arcs.push_back({child, parent});
  auto report = verify_rules(graph);
  EXPECT_FALSE(report["rule3"].pass);
  EXPECT_FALSE(report.all_pass());
}

TEST_F(Mutation, SecondParentBreaksRule4) {
  graph.arcs.push_back({at(1, 1), at(2, 0)});
  auto report = verify_rules(graph);
  EXPECT_FALSE(report["rule4"].pass);
}

TEST_F(Mutation, ChildlessVertexBreaksRule4) {
  // (1,1) loses its only child arc.
  const auto first = prefix.record(VertexId{1, 1}).children->first;
  erase_arc(graph, find_arc(graph, at(1, 1), at(2, first)));
  EXPECT_FALSE(verify_rules(graph)["rule4"].pass);
}

TEST_F(Mutation, NonCliqueUpNeighborhoodBreaksRule5) {
  // A first child in layer 3 receives an extra up arc from a layer-1 vertex
  // that is not adjacent to its layer-2 parent.
  const VertexId child{3, 0};
  const auto& up = prefix.record(child).up;
  ASSERT_EQ(up.size(), 2u);
  Vertex stranger = -1;
  for (int pos = 0; pos < 4; ++pos) {
    if (VertexId{1, pos} != up[0]) {
      stranger = at(1, pos);
      break;
    }
  }
  erase_arc(graph, find_arc(graph, static_cast<Vertex>(prefix.index(up[0])), at(3, 0)));
  graph.arcs.push_back({stranger, at(3, 0)});
  EXPECT_FALSE(verify_rules(graph)["rule5"].pass);
}

TEST_F(Mutation, DeletedUpArcBreaksConstruction) {
  // A top-layer vertex keeps a clique up-neighbourhood after losing a non-parent up arc.
  int pos = 0;
  while (prefix.record(VertexId{4, pos}).up.size() < 2) ++pos;
  const auto& up = prefix.record(VertexId{4, pos}).up;
  erase_arc(graph, find_arc(graph, static_cast<Vertex>(prefix.index(up[0])), at(4, pos)));
  auto report = verify_rules(graph);
  EXPECT_TRUE(report["rule4"].pass);
  EXPECT_TRUE(report["rule5"].pass);
  EXPECT_FALSE(report["rules6-7"].pass);
}

TEST_F(Mutation, ShortLayerBreaksRule2) {
  LayeredDigraph tiny;
  tiny.ell = 5;
  tiny.layer_sizes = {4};
  for (int p = 0; p < 4; ++p) tiny.arcs.push_back({p, (p + 1) % 4});
  EXPECT_FALSE(verify_rules(tiny)["rule2"].pass);
}

TEST_F(Mutation, RecordInconsistencyIsReported) {
  WheelPrefix edited(prefix.ell(), prefix.f());
  for (int layer = 1; layer <= prefix.num_layers(); ++layer) {
    std::vector<VertexRecord> records;
    for (int pos = 0; pos < prefix.layer_size(layer); ++pos) records.push_back(prefix.record(VertexId{layer, pos}));
    if (layer == 3) records[0].up.erase(records[0].up.begin() + 1);  // drops the parent arc
    edited.push_layer(std::move(records));
  }
  for (std::size_t v = 0; v < prefix.num_vertices(); ++v) {
    if (prefix.record(v).children) edited.set_children_span(v, *prefix.record(v).children);
  }
  auto report = verify_rules(edited);
  EXPECT_FALSE(report.all_pass());
  EXPECT_FALSE(report["rule4"].pass);
}

TEST(VerifyRules, UnknownRuleNameThrows) {
  auto report = verify_rules(build_first_layer(4));
  EXPECT_THROW(report["rule9"], PreconditionError);
}

}  // namespace
}  // namespace lwheel
