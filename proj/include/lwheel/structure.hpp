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
#include <span>
#include <utility>
#include <vector>

#include "lwheel/certificate.hpp"
#include "lwheel/graph.hpp"
#include "lwheel/kernels.hpp"
#include "lwheel/slow_function.hpp"
#include "lwheel/wheel.hpp"

namespace lwheel {

inline constexpr std::size_t kDefaultCliqueBudget = 5'000;
inline constexpr std::size_t kDefaultIndependenceBudget = 200;

// ------------------------------------------------------------ exact solvers

/// Shortest hole of length <= bound in the undirected graph, if any.
std::optional<int> shortest_hole_up_to(const Graph& g, int bound);

/// Exact clique number with a maximum clique as witness. Throws
/// SolverBudgetError above `budget` vertices.
kernels::CliqueResult clique_number_exact(const Graph& g,
                                          std::size_t budget = kDefaultCliqueBudget);

/// Exact independence number. Throws SolverBudgetError above `budget`.
kernels::IndependentSetResult max_independent_set_exact(
    const Graph& g, std::size_t budget = kDefaultIndependenceBudget);

// ---------------------------------------------------------- target sets

/// A finite set X of wheel vertices together with k = omega(G[X]).
struct TargetSet {
  std::vector<Vertex> members;  // sorted global indices
  std::vector<char> mask;       // indexed by global index
  int k = 0;
  int max_layer = 0;

  std::size_t n() const { return members.size(); }
  bool contains(Vertex v) const { return mask[static_cast<std::size_t>(v)] != 0; }
};

TargetSet make_target_set(const WheelPrefix& prefix, const Graph& g, std::vector<Vertex> members,
                          std::size_t clique_budget = kDefaultCliqueBudget);

// ------------------------------------------------------ layer clique minor

struct MinorCheck {
  Certificate certificate;
  int lower_bound = -1;  // (number of branch sets) - 1 when the check passes
  std::optional<std::pair<int, int>> missing_pair;
  std::optional<int> disconnected_layer;
};

/// Checks that the label classes are connected and pairwise adjacent, so they
/// form a clique minor. `labels[v]` is the layer of vertex v.
MinorCheck layer_minor_check(const Graph& g, std::span<const int> labels);
MinorCheck layer_minor_check(const WheelPrefix& prefix, const Graph& g);

// ---------------------------------------------------- chordal transversals

/// Eliminates the vertices of X from the highest layer down and checks each
/// is simplicial among the rest. X must have at most one vertex per layer.
/// On success `bound` is omega(G[X]).
Certificate transversal_chordality_check(const WheelPrefix& prefix, const Graph& g,
                                         std::span<const Vertex> transversal);

// ------------------------------------------------------- vertical paths

struct VerticalPath {
  std::vector<VertexId> vertices;  // p_i, p_{i+1}, ..., p_m
  std::vector<char> augmenting;    // augmenting[j] for the arc vertices[j] -> vertices[j+1]

  int start_layer() const { return vertices.front().layer; }
  int end_layer() const { return vertices.back().layer; }
  const VertexId& at_layer(int layer) const {
    return vertices[static_cast<std::size_t>(layer - start_layer())];
  }
};

struct ChildChoice {
  VertexId child;
  bool augmenting = false;
};

/// Whether the arc v -> u is augmenting with respect to X:
/// N^up(u) cap X = N^up[v] cap X, with u a child of v.
bool is_augmenting_arc(const WheelPrefix& prefix, VertexId v, VertexId u, const TargetSet& x);

/// a(v): the augmenting child of smallest position, else the first child.
ChildChoice augmenting_child(const WheelPrefix& prefix, VertexId v, const TargetSet& x);

/// v, a(v), a(a(v)), ... up to `truncation_layer`.
VerticalPath augmenting_path(const WheelPrefix& prefix, VertexId v, const TargetSet& x,
                             int truncation_layer);
/// Truncates at min(max layer of X, top layer).
VerticalPath augmenting_path(const WheelPrefix& prefix, VertexId v, const TargetSet& x);

// ----------------------------------------------------------- separations

struct Separation {
  std::vector<Vertex> a;  // sorted
  std::vector<Vertex> b;  // sorted

  std::vector<Vertex> intersection() const;
  std::size_t order() const { return intersection().size(); }
};

struct SeparationSizes {
  std::size_t n = 0;
  std::size_t a = 0;       // |A cap X|
  std::size_t b = 0;       // |B cap X|
  std::size_t a_only = 0;  // |(A cap X) \ (B cap X)|
  std::size_t b_only = 0;  // |(B cap X) \ (A cap X)|
  std::size_t order = 0;   // |A cap B cap X|
};

SeparationSizes sizes_relative_to(const Separation& sep, std::span<const Vertex> x);

/// Positions of the directed segment p -> q of a layer cycle.
std::vector<VertexId> forward_segment(const WheelPrefix& prefix, VertexId p, VertexId q);

/// (A(P,Q), B(P,Q)) over the layers 1..m where m is the common end layer.
Separation build_ab(const WheelPrefix& prefix, const VerticalPath& p, const VerticalPath& q);

/// V(P) cup V(Q) cup the union of N^up[u] over u in p_i -> q_i.
std::vector<Vertex> ab_intersection_formula(const WheelPrefix& prefix, const VerticalPath& p,
                                            const VerticalPath& q);

/// True iff no edge of G[domain] joins A \ B to B \ A. Throws
/// PreconditionError when A cup B does not cover `domain`.
bool verify_separation(const Graph& g, const Separation& sep, std::span<const Vertex> domain);
/// Domain = every vertex of g.
bool verify_separation(const Graph& g, const Separation& sep);

struct FairSeparation {
  VerticalPath p;
  VerticalPath q;
  bool swapped = false;  // true when (A(Q,P), B(Q,P)) was chosen
  SeparationSizes sizes;
};

/// Starts from positions 0 and 2 of L_1 and keeps an orientation with
/// |A cap X| >= n/3.
FairSeparation fair_separation_initial(const WheelPrefix& prefix, const TargetSet& x);

struct BalancedSeparation {
  Separation separation;  // (A cap X, B cap X)
  SeparationSizes sizes;
  int k = 0;
  Extended order_bound = kInfinity;  // 2F(k+1) + (ell+1)k - 2
  bool bound_applies = false;        // F(k+1) finite
  bool tails_augmenting = false;     // every arc of P \ p_i and Q \ q_i augmenting
  int iterations = 0;
  int final_layer = 0;
  std::optional<VerticalPath> p;
  std::optional<VerticalPath> q;
};

/// Balanced separation of G[X]: both strict sides hold at most 2n/3
/// vertices of X. Throws ProgressError if the improvement loop stalls.
BalancedSeparation balanced_separation(const WheelPrefix& prefix, const TargetSet& x);

/// 2F(k+1) + (ell+1)k - 2, infinite when F(k+1) is.
Extended separation_order_bound(const SlowFunction& f, int ell, int k);

}  // namespace lwheel
