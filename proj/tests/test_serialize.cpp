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

#include "lwheel/error.hpp"
#include "lwheel/serialize.hpp"
#include "lwheel/verify.hpp"
#include "support.hpp"

namespace lwheel {
namespace {

using namespace testing;

TEST(PrefixJson, RoundTripIsByteIdentical) {
  for (const auto& c : prefix_cases({4, 5, 6}, {"identity", "cap:3", "cap:4", "cumulative:poly:2"}, 3000)) {
    auto p = build(c);
    const std::string text = serialize_prefix(p);
    auto q = parse_prefix(text);
    EXPECT_EQ(q, p) << c.name();
    EXPECT_EQ(serialize_prefix(q), text) << c.name();
  }
}

TEST(PrefixJson, Layout) {
  auto j = prefix_to_json(build_prefix(4, SlowFunction::capped(3), 2));
  EXPECT_EQ(j["ell"], 4);
  EXPECT_EQ(j["f_spec"], "cap:3");
  EXPECT_EQ(j["num_layers"], 2);
  EXPECT_EQ(j["layers"], Json::array({4, 8}));
  ASSERT_EQ(j["vertices"].size(), 12u);
  EXPECT_EQ(j["vertices"][4]["parent"], Json::array({1, 0}));
}

TEST(PrefixJson, MalformedInputIsParseError) {
  EXPECT_THROW(parse_prefix("{"), ParseError);
  EXPECT_THROW(parse_prefix("[]"), ParseError);
  EXPECT_THROW(parse_prefix(R"({"ell": 4})"), ParseError);
  auto j = prefix_to_json(build_prefix(4, SlowFunction::identity(), 2));
  j["vertices"].erase(3);
  EXPECT_THROW(prefix_from_json(j), ParseError);
  auto k = prefix_to_json(build_prefix(4, SlowFunction::identity(), 2));
  k["f_spec"] = "nonsense";
  EXPECT_THROW(prefix_from_json(k), ParseError);
}

TEST(PrefixJson, MutatedUpEntryFailsVerification) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  auto j = prefix_to_json(p);
  for (auto& v : j["vertices"]) {
    if (v["layer"] == 3 && v["up"].size() == 2) {
      v["up"].erase(0);
      break;
    }
  }
  auto q = prefix_from_json(j);
  EXPECT_FALSE(verify_rules(q).all_pass());
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete(4)), "C~\n");
  EXPECT_EQ(to_graph6(Graph(0)), "?\n");
  EXPECT_EQ(to_graph6(cycle(5)), "Dhc\n");
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1u, 2u, 7u, 30u, 62u, 63u, 100u}) {
    Graph g = random_graph(n, 0.3, rng);
    Graph h = from_graph6(to_graph6(g));
    EXPECT_EQ(h.size(), g.size());
    EXPECT_EQ(h.edges(), g.edges());
  }
  auto p = build_prefix(5, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  EXPECT_EQ(from_graph6(to_graph6(g)).edges(), g.edges());
  EXPECT_THROW(from_graph6("C"), ParseError);
}

TEST(Dot, LayersShareRank) {
  auto p = build_prefix(4, SlowFunction::identity(), 3);
  const std::string dot = to_dot(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t ranks = 0;
  for (std::size_t at = dot.find("rank=same"); at != std::string::npos; at = dot.find("rank=same", at + 1)) ++ranks;
  EXPECT_EQ(ranks, 3u);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++arrows;
  EXPECT_EQ(arrows, materialize_arcs(p).size());
}

TEST(SeparationJson, RoundTrip) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  std::vector<Vertex> all(p.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  auto sep = balanced_separation(p, make_target_set(p, g, all)).separation;
  auto j = separation_to_json(p, sep);
  auto back = separation_from_json(p, j);
  EXPECT_EQ(back.separation.a, sep.a);
  EXPECT_EQ(back.separation.b, sep.b);
  EXPECT_TRUE(back.domain.empty());
  j["domain"] = vertices_to_json(p, {0, 1, 2});
  EXPECT_EQ(separation_from_json(p, j).domain, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(separation_from_json(p, Json::parse(R"({"a": [[9, 0]], "b": []})")), Error);
}

TEST(VerticesJson, SortedAndDeduplicated) {
  auto p = build_prefix(4, SlowFunction::identity(), 2);
  auto v = vertices_from_json(p, Json::parse("[[2, 1], [1, 0], [2, 1]]"));
  EXPECT_EQ(v, (std::vector<Vertex>{0, 5}));
  EXPECT_EQ(vertices_to_json(p, v), Json::parse("[[1, 0], [2, 1]]"));
}

TEST(DecompositionJson, Layout) {
  auto p = build_prefix(4, SlowFunction::capped(3), 4);
  Graph g = underlying_graph(p);
  std::vector<Vertex> all(p.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  auto td = decomposition_from_separators(p, g, all);
  auto j = decomposition_to_json(p, td);
  EXPECT_EQ(j["width"], td.width());
  EXPECT_EQ(j["bags"].size(), td.bags.size());
  EXPECT_EQ(j["tree_edges"].size(), td.tree_edges.size());
  EXPECT_EQ(decomposition_to_dot(p, td).rfind("graph", 0), 0u);
}

TEST(Files, MissingFileThrows) {
  EXPECT_THROW(read_file("/nonexistent/lwheel/file.json"), Error);
}

}  // namespace
}  // namespace lwheel
