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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lwheel/slow_function.hpp"

namespace lwheel {

inline constexpr std::int64_t kDefaultSizeCap = 200'000;

/// Default vertex budget, overridable through LWHEEL_SIZE_CAP.
std::int64_t default_size_cap();

/// A vertex of the wheel: layers are 1-based, positions follow the directed
/// cycle order of the layer.
struct VertexId {
  int layer = 1;
  int position = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Contiguous range of positions in the next layer forming the path L(v).
struct ChildSpan {
  int first = 0;
  int length = 0;  // n_v

  friend bool operator==(const ChildSpan&, const ChildSpan&) = default;
};

struct VertexRecord {
  VertexId id;
  std::optional<VertexId> parent;
  /// N^up(v), sorted by strictly increasing layer.
  std::vector<VertexId> up;
  /// L(v); absent for vertices of the top layer.
  std::optional<ChildSpan> children;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Finite prefix L_1, ..., L_t of the (f, ell)-layered wheel.
///
/// Vertices are numbered globally layer by layer; `index` and `id` convert
/// between the two forms. Arcs are not stored: the layer cycles, parents and
/// upward neighborhoods determine them.
class WheelPrefix {
 public:
  WheelPrefix(int ell, SlowFunction f);

  int ell() const { return ell_; }
  const SlowFunction& f() const { return f_; }
  int num_layers() const { return static_cast<int>(sizes_.size()); }
  int layer_size(int layer) const { return sizes_.at(static_cast<std::size_t>(layer - 1)); }
  std::span<const int> layer_sizes() const { return sizes_; }
  std::size_t num_vertices() const { return records_.size(); }

  bool contains(VertexId v) const;
  /// Global index of v; throws PreconditionError for unknown vertices.
  std::size_t index(VertexId v) const;
  VertexId id(std::size_t index) const { return records_.at(index).id; }
  int layer_of(std::size_t index) const { return records_[index].id.layer; }
  /// Global index of the first vertex of `layer`.
  std::size_t layer_offset(int layer) const { return offsets_.at(static_cast<std::size_t>(layer - 1)); }

  const VertexRecord& record(VertexId v) const { return records_[index(v)]; }
  const VertexRecord& record(std::size_t index) const { return records_.at(index); }
  std::span<const VertexRecord> records() const { return records_; }

  /// Successor of v on its layer cycle.
  VertexId next_on_layer(VertexId v) const;

  /// Children of v (vertices of L(v) whose parent is v), by position.
  std::vector<VertexId> children(VertexId v) const;

  /// Appends a layer; used by the builders and by deserialization.
  void push_layer(std::vector<VertexRecord> layer);
  /// Sets L(v) spans for the current top layer.
  void set_children_span(std::size_t index, ChildSpan span) { records_.at(index).children = span; }

  friend bool operator==(const WheelPrefix& a, const WheelPrefix& b) {
    return a.ell_ == b.ell_ && a.f_.describe() == b.f_.describe() && a.sizes_ == b.sizes_ &&
           a.records_ == b.records_;
  }

 private:
  int ell_;
  SlowFunction f_;
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexRecord> records_;
};

/// L_1: a directed cycle on ell vertices with no upward neighbors.
WheelPrefix build_first_layer(int ell, SlowFunction f = SlowFunction::identity());

/// Adds L_{i+1} to a prefix whose top layer is L_i, applying the short-path
/// rule when |N^up(v)| < f(i+1)-1 and the block rule when equality holds.
WheelPrefix extend_layer(WheelPrefix prefix, std::int64_t size_cap = kDefaultSizeCap);

/// Prefix with exactly `layers` layers. Throws SizeBudgetError if the total
/// vertex count would exceed `size_cap`.
WheelPrefix build_prefix(int ell, const SlowFunction& f, int layers,
                         std::int64_t size_cap = kDefaultSizeCap);

/// N^up[v] = {v} union N^up(v).
std::vector<VertexId> up_closed_neighborhood(const WheelPrefix& prefix, VertexId v);

/// Number of vertices the next layer of `prefix` would have.
std::int64_t next_layer_size(const WheelPrefix& prefix);

}  // namespace lwheel
