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

#include <optional>
#include <string>
#include <vector>

#include "lwheel/graph.hpp"
#include "lwheel/slow_function.hpp"
#include "lwheel/wheel.hpp"

namespace lwheel {

/// An oriented graph whose vertices are grouped into consecutive layers.
/// This is the object the construction rules talk about; mutation tests edit
/// its arc list directly.
struct LayeredDigraph {
  int ell = 4;
  SlowFunction f = SlowFunction::identity();
  std::vector<int> layer_sizes;
  std::vector<Arc> arcs;
};

LayeredDigraph to_digraph(const WheelPrefix& prefix);

struct RuleCheck {
  std::string rule;
  bool pass = true;
  std::optional<VertexId> first_violation;
  std::string detail;
};

struct RuleReport {
  std::vector<RuleCheck> checks;

  bool all_pass() const;
  const RuleCheck& operator[](const std::string& rule) const;
};

/// Checks rules 1-5 on the arcs, then that the arcs are exactly the ones
/// produced by the construction ("rules6-7").
RuleReport verify_rules(const LayeredDigraph& graph);

/// As above, plus consistency of the stored vertex records (parents, L(v)
/// spans, sorted upward neighborhoods, child-path lengths).
RuleReport verify_rules(const WheelPrefix& prefix);

}  // namespace lwheel
