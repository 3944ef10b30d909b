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

#include <cstddef>
#include <optional>
#include <vector>

#include "lwheel/graph.hpp"

// Exact search kernels. Each kernel has an OpenMP version in `parallel`,
// which the library uses, and a plain serial reference in `serial` kept for
// cross-checking and benchmarking. The two differ in search order and
// pruning, never in the value they return.
namespace lwheel::kernels {

struct CliqueResult {
  int size = 0;
  std::vector<Vertex> witness;  // sorted
};

struct IndependentSetResult {
  int size = 0;
  std::vector<Vertex> witness;  // sorted
};

namespace serial {

/// Maximum clique by branch and bound over roots in index order, with a
/// global incumbent.
CliqueResult max_clique(const Graph& g);

/// Length of the shortest hole (chordless cycle of length >= 4) whose length
/// is at most `bound`.
std::optional<int> shortest_hole(const Graph& g, int bound);

}  // namespace serial

namespace parallel {

/// Maximum clique: one independent search per root over its forward
/// neighborhood in a degeneracy order; the largest clique wins, ties going
/// to the earliest root so the witness is deterministic.
CliqueResult max_clique(const Graph& g);

std::optional<int> shortest_hole(const Graph& g, int bound);

}  // namespace parallel

/// Maximum independent set by branch and reduce.
IndependentSetResult max_independent_set(const Graph& g);

/// Degeneracy ordering (repeatedly remove a minimum-degree vertex).
std::vector<Vertex> degeneracy_order(const Graph& g);

}  // namespace lwheel::kernels
