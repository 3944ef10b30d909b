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

#include "lwheel/wheel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lwheel/error.hpp"

namespace lwheel {

std::int64_t default_size_cap() {
  if (const char* env = std::getenv("LWHEEL_SIZE_CAP")) {
    try {
      auto cap = std::stoll(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSizeCap;
}

WheelPrefix::WheelPrefix(int ell, SlowFunction f) : ell_(ell), f_(std::move(f)) {
  if (ell < 4) throw PreconditionError("ell must be >= 4, got " + std::to_string(ell));
}

bool WheelPrefix::contains(VertexId v) const {
  return v.layer >= 1 && v.layer <= num_layers() && v.position >= 0 &&
         v.position < layer_size(v.layer);
}

std::size_t WheelPrefix::index(VertexId v) const {
  if (!contains(v)) {
    throw PreconditionError("unknown vertex (" + std::to_string(v.layer) + "," +
                            std::to_string(v.position) + ")");
  }
  return offsets_[static_cast<std::size_t>(v.layer - 1)] + static_cast<std::size_t>(v.position);
}

VertexId WheelPrefix::next_on_layer(VertexId v) const {
  return {v.layer, (v.position + 1) % layer_size(v.layer)};
}

std::vector<VertexId> WheelPrefix::children(VertexId v) const {
  const auto& rec = record(v);
  std::vector<VertexId> out;
  if (!rec.children) return out;
  for (int j = 0; j < rec.children->length; ++j) {
    VertexId u{v.layer + 1, rec.children->first + j};
    const auto& child = record(u);
    if (child.parent && *child.parent == v) out.push_back(u);
  }
  return out;
}

void WheelPrefix::push_layer(std::vector<VertexRecord> layer) {
  offsets_.push_back(records_.size());
  sizes_.push_back(static_cast<int>(layer.size()));
  for (auto& r : layer) records_.push_back(std::move(r));
}

WheelPrefix build_first_layer(int ell, SlowFunction f) {
  WheelPrefix prefix(ell, std::move(f));
  std::vector<VertexRecord> layer(static_cast<std::size_t>(ell));
  for (int p = 0; p < ell; ++p) layer[static_cast<std::size_t>(p)].id = {1, p};
  prefix.push_layer(std::move(layer));
  return prefix;
}

namespace {

// Threshold f(i+1)-1 that selects between the two child-path rules.
int branch_threshold(const WheelPrefix& prefix) {
  return prefix.f()(prefix.num_layers() + 1) - 1;
}

std::int64_t path_length(const WheelPrefix& prefix, const VertexRecord& v, int threshold) {
  auto up = static_cast<int>(v.up.size());
  if (up > threshold) {
    throw ConstructionError("vertex has " + std::to_string(up) +
                            " upward neighbors, more than f(i+1)-1 = " + std::to_string(threshold));
  }
  const int ell = prefix.ell();
  return up < threshold ? ell - 2 : static_cast<std::int64_t>(threshold) * (ell - 2);
}

}  // namespace

std::int64_t next_layer_size(const WheelPrefix& prefix) {
  const int top = prefix.num_layers();
  const int threshold = branch_threshold(prefix);
  std::int64_t total = 0;
  for (int p = 0; p < prefix.layer_size(top); ++p) {
    total += path_length(prefix, prefix.record(VertexId{top, p}), threshold);
  }
  return total;
}

WheelPrefix extend_layer(WheelPrefix prefix, std::int64_t size_cap) {
  const int top = prefix.num_layers();
  const int next = top + 1;
  const int ell = prefix.ell();
  const int threshold = branch_threshold(prefix);

  std::int64_t added = next_layer_size(prefix);
  if (static_cast<std::int64_t>(prefix.num_vertices()) + added > size_cap) {
    throw SizeBudgetError("layer " + std::to_string(next) + " would bring the prefix to " +
                          std::to_string(static_cast<std::int64_t>(prefix.num_vertices()) + added) +
                          " vertices, above the cap of " + std::to_string(size_cap));
  }

  std::vector<VertexRecord> layer;
  layer.reserve(static_cast<std::size_t>(added));
  auto emit = [&](std::optional<VertexId> parent, std::vector<VertexId> up) {
    VertexRecord r;
    r.id = {next, static_cast<int>(layer.size())};
    r.parent = parent;
    r.up = std::move(up);
    layer.push_back(std::move(r));
  };

  for (int p = 0; p < prefix.layer_size(top); ++p) {
    const VertexId v{top, p};
    const std::size_t vi = prefix.index(v);
    const VertexRecord& rec = prefix.record(vi);
    const int first = static_cast<int>(layer.size());
    // N^up[v] sorted by layer: v is in the highest layer, so it goes last.
    std::vector<VertexId> closed = rec.up;
    closed.push_back(v);

    if (static_cast<int>(rec.up.size()) < threshold) {
      emit(v, closed);
      for (int j = 2; j <= ell - 2; ++j) emit(std::nullopt, {});
    } else {
      // Block j starts with a child that sees N^up[v] minus w_j.
      for (int j = 0; j < threshold; ++j) {
        std::vector<VertexId> up = closed;
        up.erase(up.begin() + j);
        emit(v, std::move(up));
        for (int r = 2; r <= ell - 2; ++r) emit(std::nullopt, {});
      }
    }
    prefix.set_children_span(vi, ChildSpan{first, static_cast<int>(layer.size()) - first});
  }
  prefix.push_layer(std::move(layer));
  return prefix;
}

WheelPrefix build_prefix(int ell, const SlowFunction& f, int layers, std::int64_t size_cap) {
  if (layers < 1) throw PreconditionError("number of layers must be >= 1");
  if (ell > size_cap) throw SizeBudgetError("first layer already exceeds the size cap");
  WheelPrefix prefix = build_first_layer(ell, f);
  while (prefix.num_layers() < layers) prefix = extend_layer(std::move(prefix), size_cap);
  return prefix;
}

std::vector<VertexId> up_closed_neighborhood(const WheelPrefix& prefix, VertexId v) {
  std::vector<VertexId> out = prefix.record(v).up;
  out.push_back(v);
  return out;
}

}  // namespace lwheel
