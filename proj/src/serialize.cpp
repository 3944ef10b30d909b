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

#include "lwheel/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lwheel/error.hpp"

namespace lwheel {

namespace {

Json id_json(VertexId v) { return Json::array({v.layer, v.position}); }

VertexId id_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("vertex must be [layer, pos], got " + j.dump());
  }
  return VertexId{j[0].get<int>(), j[1].get<int>()};
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + name + "': " + e.what());
  }
}

}  // namespace

Json prefix_to_json(const WheelPrefix& prefix) {
  Json j;
  j["ell"] = prefix.ell();
  j["f_spec"] = prefix.f().describe();
  j["num_layers"] = prefix.num_layers();
  j["layers"] = Json(std::vector<int>(prefix.layer_sizes().begin(), prefix.layer_sizes().end()));
  Json vertices = Json::array();
  for (const auto& rec : prefix.records()) {
    Json v;
    v["layer"] = rec.id.layer;
    v["pos"] = rec.id.position;
    v["parent"] = rec.parent ? id_json(*rec.parent) : Json(nullptr);
    Json up = Json::array();
    for (const auto& w : rec.up) up.push_back(id_json(w));
    v["up"] = std::move(up);
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

std::string serialize_prefix(const WheelPrefix& prefix) { return prefix_to_json(prefix).dump() + "\n"; }

WheelPrefix prefix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("prefix must be a JSON object");
  const int ell = field<int>(j, "ell");
  const auto spec = field<std::string>(j, "f_spec");
  const int num_layers = field<int>(j, "num_layers");
  const auto sizes = field<std::vector<int>>(j, "layers");
  if (num_layers < 1 || static_cast<int>(sizes.size()) != num_layers) {
    throw ParseError("num_layers does not match the layers list");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("missing vertices list");
  const Json& vertices = j["vertices"];
  std::size_t total = 0;
  for (int s : sizes) {
    if (s < 1) throw ParseError("layer sizes must be positive");
    total += static_cast<std::size_t>(s);
  }
  if (vertices.size() != total) throw ParseError("vertex count does not match the layer sizes");

  WheelPrefix prefix(ell, SlowFunction::parse(spec));
  std::size_t next = 0;
  for (int layer = 1; layer <= num_layers; ++layer) {
    const int size = sizes[static_cast<std::size_t>(layer - 1)];
    std::vector<VertexRecord> records(static_cast<std::size_t>(size));
    for (int p = 0; p < size; ++p) {
      const Json& v = vertices[next++];
      VertexRecord& rec = records[static_cast<std::size_t>(p)];
      rec.id = {field<int>(v, "layer"), field<int>(v, "pos")};
      if (rec.id != VertexId{layer, p}) {
        throw ParseError("vertices out of order at layer " + std::to_string(layer) + " position " +
                         std::to_string(p));
      }
      if (!v.contains("parent")) throw ParseError("missing field 'parent'");
      if (!v["parent"].is_null()) rec.parent = id_from_json(v["parent"]);
      if (!v.contains("up") || !v["up"].is_array()) throw ParseError("missing field 'up'");
      for (const auto& w : v["up"]) {
        VertexId up = id_from_json(w);
        if (up.layer < 1 || up.layer >= layer || up.position < 0 ||
            up.position >= sizes[static_cast<std::size_t>(up.layer - 1)]) {
          throw ParseError("upward neighbor out of range at " + std::to_string(layer) + "," +
                           std::to_string(p));
        }
        rec.up.push_back(up);
      }
    }
    prefix.push_layer(std::move(records));
  }

  // L(v) of each v starts at its first child and runs to the next owner's.
  for (int layer = 1; layer < num_layers; ++layer) {
    const int below = prefix.layer_size(layer + 1);
    std::vector<int> starts;
    std::vector<int> owners;
    for (int p = 0; p < below; ++p) {
      const auto& parent = prefix.record(VertexId{layer + 1, p}).parent;
      if (!parent || parent->layer != layer || parent->position < 0 ||
          parent->position >= prefix.layer_size(layer)) {
        continue;
      }
      if (owners.empty() || owners.back() != parent->position) {
        starts.push_back(p);
        owners.push_back(parent->position);
      }
    }
    for (std::size_t s = 0; s < starts.size(); ++s) {
      const int end = s + 1 < starts.size() ? starts[s + 1] : below;
      const std::size_t idx = prefix.index(VertexId{layer, owners[s]});
      if (prefix.record(idx).children) continue;  // owner seen twice; leave the first span
      prefix.set_children_span(idx, ChildSpan{starts[s], end - starts[s]});
    }
  }
  return prefix;
}

WheelPrefix parse_prefix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return prefix_from_json(j);
}

std::string to_dot(const WheelPrefix& prefix) {
  std::ostringstream out;
  auto name = [&](Vertex v) {
    VertexId id = prefix.id(static_cast<std::size_t>(v));
    return "v" + std::to_string(id.layer) + "_" + std::to_string(id.position);
  };
  out << "digraph wheel {\n";
  for (int layer = 1; layer <= prefix.num_layers(); ++layer) {
    out << "  subgraph layer" << layer << " {\n    rank=same;\n";
    for (int p = 0; p < prefix.layer_size(layer); ++p) {
      auto v = static_cast<Vertex>(prefix.index(VertexId{layer, p}));
      out << "    " << name(v) << " [label=\"" << layer << "," << p << "\"];\n";
    }
    out << "  }\n";
  }
  for (const Arc& a : materialize_arcs(prefix)) {
    out << "  " << name(a.tail) << " -> " << name(a.head) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    auto nb = g.neighbors(static_cast<Vertex>(j));
    auto it = nb.begin();
    for (std::size_t i = 0; i < j; ++i) {
      const bool edge = it != nb.end() && static_cast<std::size_t>(*it) == i;
      if (edge) ++it;
      acc = (acc << 1) | (edge ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  out.push_back('\n');
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size()) throw ParseError("truncated graph6 string");
    int c = static_cast<unsigned char>(text[pos++]) - 63;
    if (c < 0 || c > 63) throw ParseError("invalid graph6 character");
    return c;
  };
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(take());
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(take());
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::size_t>(take());
  }
  Graph g(n);
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = take();
        bits = 6;
      }
      --bits;
      if (acc >> bits & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

Json vertices_to_json(const WheelPrefix& prefix, const std::vector<Vertex>& vertices) {
  Json j = Json::array();
  for (Vertex v : vertices) j.push_back(id_json(prefix.id(static_cast<std::size_t>(v))));
  return j;
}

std::vector<Vertex> vertices_from_json(const WheelPrefix& prefix, const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of [layer, pos] pairs");
  std::vector<Vertex> out;
  for (const auto& item : j) {
    VertexId id = id_from_json(item);
    if (!prefix.contains(id)) throw ParseError("unknown vertex " + item.dump());
    out.push_back(static_cast<Vertex>(prefix.index(id)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json separation_to_json(const WheelPrefix& prefix, const Separation& sep) {
  return {{"a", vertices_to_json(prefix, sep.a)}, {"b", vertices_to_json(prefix, sep.b)}};
}

SeparationFile separation_from_json(const WheelPrefix& prefix, const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw ParseError("separation must be an object with 'a' and 'b'");
  }
  SeparationFile file;
  file.separation.a = vertices_from_json(prefix, j["a"]);
  file.separation.b = vertices_from_json(prefix, j["b"]);
  if (j.contains("domain")) file.domain = vertices_from_json(prefix, j["domain"]);
  return file;
}

Json decomposition_to_json(const WheelPrefix& prefix, const TreeDecomposition& td) {
  Json bags = Json::array();
  for (const auto& bag : td.bags) bags.push_back(vertices_to_json(prefix, bag));
  Json edges = Json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back(Json::array({a, b}));
  return {{"width", td.width()}, {"bags", std::move(bags)}, {"tree_edges", std::move(edges)}};
}

std::string decomposition_to_dot(const WheelPrefix& prefix, const TreeDecomposition& td) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (std::size_t s = 0; s < td.bags.size(); ++s) {
    out << "  b" << s << " [label=\"";
    for (std::size_t r = 0; r < td.bags[s].size(); ++r) {
      VertexId id = prefix.id(static_cast<std::size_t>(td.bags[s][r]));
      out << (r ? " " : "") << id.layer << "," << id.position;
    }
    out << "\"];\n";
  }
  for (auto [a, b] : td.tree_edges) out << "  b" << a << " -- b" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace lwheel
