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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lwheel/certificate.hpp"
#include "lwheel/graph.hpp"
#include "lwheel/slow_function.hpp"
#include "lwheel/wheel.hpp"

namespace lwheel {

struct DemoRow {
  int k = 0;  // the row parameter, named by DemoReport::param
  std::optional<int> omega;
  std::optional<int> tw_lower;
  Extended tw_upper_formula = kInfinity;
  std::optional<int> ta_lower;
  std::string status;  // "ok", "fail", "out of scope", "size cap", ...
};

struct DemoReport {
  std::string name;
  std::string param = "k";
  std::vector<DemoRow> rows;
  Json json = Json::object();
  bool pass = false;

  /// Fixed-width table of the rows.
  std::string table() const;
};

/// For each k in 3..k_max builds the prefix with F(k) layers where
/// F(k) = max(F(k-1)+1, g(k)+1), then certifies omega = k and tw >= F(k)-1 >= g(k).
/// k = 2 is listed as out of scope.
DemoReport demo_question84(const Polynomial& g, int ell, int k_max,
                           std::int64_t size_cap = kDefaultSizeCap);

/// For each c in 1..c_max finds the least k with F(k) >= ck, builds the
/// F(k)-layer prefix and certifies a tree-independence lower bound >= c next
/// to the formula upper bound on treewidth.
DemoReport demo_conjecture85(const CumulativeFunction& F, int ell, int c_max,
                             std::int64_t size_cap = kDefaultSizeCap, std::uint64_t seed = 0);

/// Builds t+1 layers with f(i) = min(i, c+1), certifies omega = c+1 and tw >= t,
/// then runs balanced separations on `samples` random K_c-free induced
/// subgraphs and checks each order against its bound.
DemoReport demo_hajebi(int c, int ell, int t, int samples,
                       std::int64_t size_cap = kDefaultSizeCap, std::uint64_t seed = 0);

/// Greedy randomized K_c-free vertex set: vertices are visited in random
/// order, each kept with a random probability if the clique number stays
/// below c. Sorted and nonempty.
std::vector<Vertex> sample_kc_free(const Graph& g, int c, std::mt19937_64& rng);

}  // namespace lwheel
