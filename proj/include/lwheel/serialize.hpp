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

#include <string>
#include <string_view>
#include <vector>

#include "lwheel/certificate.hpp"
#include "lwheel/graph.hpp"
#include "lwheel/structure.hpp"
#include "lwheel/wheel.hpp"
#include "lwheel/width.hpp"

namespace lwheel {

/// Lossless form: {ell, f_spec, num_layers, layers, vertices}. Vertices are
/// listed layer by layer in position order.
Json prefix_to_json(const WheelPrefix& prefix);
std::string serialize_prefix(const WheelPrefix& prefix);

/// Rebuilds a prefix, recomputing the L(v) spans from the parent fields.
/// Throws ParseError on malformed input. Content is not rule-checked; run
/// verify_rules on the result.
WheelPrefix prefix_from_json(const Json& j);
WheelPrefix parse_prefix(std::string_view text);

/// Directed graph with one `rank=same` subgraph per layer.
std::string to_dot(const WheelPrefix& prefix);

/// graph6 encoding of the underlying undirected graph, newline terminated.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// [[layer, pos], ...] <-> global indices.
Json vertices_to_json(const WheelPrefix& prefix, const std::vector<Vertex>& vertices);
std::vector<Vertex> vertices_from_json(const WheelPrefix& prefix, const Json& j);

/// {"a": [[layer,pos],...], "b": [...]} with an optional "domain" list.
struct SeparationFile {
  Separation separation;
  std::vector<Vertex> domain;  // empty means every vertex
};
Json separation_to_json(const WheelPrefix& prefix, const Separation& sep);
SeparationFile separation_from_json(const WheelPrefix& prefix, const Json& j);

Json decomposition_to_json(const WheelPrefix& prefix, const TreeDecomposition& td);
std::string decomposition_to_dot(const WheelPrefix& prefix, const TreeDecomposition& td);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lwheel
