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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwheel/certificate.hpp"
#include "lwheel/graph.hpp"
#include "lwheel/slow_function.hpp"
#include "lwheel/structure.hpp"
#include "lwheel/wheel.hpp"

namespace lwheel {

inline constexpr std::size_t kExactTreewidthLimit = 32;

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;       // each sorted
  std::vector<std::pair<int, int>> tree_edges;  // between bag indices

  int width() const;
};

struct DecompositionCheck {
  bool is_tree = false;
  bool vertex_coverage = false;
  bool edge_coverage = false;
  bool subtree_connectivity = false;

  bool valid() const { return is_tree && vertex_coverage && edge_coverage && subtree_connectivity; }
};

/// Checks the decomposition axioms for G[domain].
DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& td,
                                       std::span<const Vertex> domain);
DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& td);

/// Exact treewidth by memoized search over elimination orderings. Throws
/// SolverBudgetError above 32 vertices.
int exact_treewidth_small(const Graph& g);

/// 15 * (2F(omega+1) + (ell+1) omega - 2), infinite when F(omega+1) is.
Extended tw_upper_bound_formula(int ell, const SlowFunction& f, int omega);
/// The same bound with a single F(omega+1) term.
Extended tw_upper_bound_formula_stated(int ell, const SlowFunction& f, int omega);

/// t - 1 from the layer clique minor (restricted to the layers present).
MinorCheck tw_lower_bound_minor(const WheelPrefix& prefix, const Graph& g);

/// Recursively splits X with balanced separations; the separator goes into
/// the bag of the node and both sides inherit it as boundary. Recursion stops
/// on cliques and on parts of at most five vertices.
TreeDecomposition decomposition_from_separators(const WheelPrefix& prefix, const Graph& g,
                                                std::vector<Vertex> x);

/// Maximum over bags of the exact independence number of G[bag].
int independent_width(const TreeDecomposition& td, const Graph& g,
                      std::size_t budget = kDefaultIndependenceBudget);

struct TaCertificate {
  int value = 0;  // ceil(t / k)
  int layers = 0;
  int k = 0;
  MinorCheck minor;
  Certificate clique;
  std::vector<Certificate> transversals;  // one "coloring" certificate per sample
  bool pass = false;

  Json to_json() const;
};

/// Certified lower bound ceil(t/k) on the tree-independence number of the
/// prefix: every decomposition has a bag meeting all layers, any transversal
/// of the layers is chordal, and a proper colouring of it with omega colours
/// leaves a colour class of size >= t/k. Each sampled transversal carries its
/// elimination order, colouring and the large colour class.
TaCertificate ta_lower_bound_certified(const WheelPrefix& prefix, const Graph& g,
                                       int samples = 8, std::uint64_t seed = 0,
                                       std::size_t clique_budget = kDefaultCliqueBudget);

struct WidthReport {
  MinorCheck tw_lower;
  Extended tw_upper = kInfinity;
  std::string tw_upper_source;  // "formula", "decomposition" or "exact"
  int omega = 0;
  Extended cumulative_at_omega_plus_one = kInfinity;
  int ell = 0;
  std::optional<int> exact_tw;
  std::optional<int> decomposition_width;
  std::optional<int> ta_lower;

  Json to_json() const;
};

WidthReport width_report(const WheelPrefix& prefix, const Graph& g,
                         std::size_t clique_budget = kDefaultCliqueBudget,
                         std::size_t decomposition_limit = 2'000);

/// Helpers shared by reports.
Json extended_json(Extended value);

}  // namespace lwheel
