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
#include <string>

#include "json.hpp"

namespace lwheel {

using Json = nlohmann::ordered_json;

/// A machine-checkable witness with the verdict of the checker that
/// produced it. `bound` is the integer the witness certifies (a clique
/// size, a treewidth lower bound, a separation order, ...).
struct Certificate {
  std::string kind;  // "clique", "minor", "peo", "separation", "coloring"
  Json data = Json::object();
  bool pass = false;
  std::int64_t bound = 0;

  Json to_json() const {
    Json j;
    j["kind"] = kind;
    j["data"] = data;
    j["verdict"] = pass ? "pass" : "fail";
    j["bound"] = bound;
    return j;
  }
};

}  // namespace lwheel
