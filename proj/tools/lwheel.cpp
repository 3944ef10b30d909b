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

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "lwheel/demos.hpp"
#include "lwheel/error.hpp"
#include "lwheel/serialize.hpp"
#include "lwheel/structure.hpp"
#include "lwheel/verify.hpp"
#include "lwheel/wheel.hpp"
#include "lwheel/width.hpp"

using namespace lwheel;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

WheelPrefix load_prefix(const std::string& path) { return parse_prefix(read_file(path)); }

// ------------------------------------------------------------------ build

struct BuildOptions {
  int ell = 0;
  std::string f = "identity";
  int layers = 1;
  std::int64_t size_cap = 0;
  std::string out;
  std::string format = "json";
};

int run_build(const BuildOptions& o) {
  WheelPrefix prefix = build_prefix(o.ell, SlowFunction::parse(o.f), o.layers, o.size_cap);
  if (o.format == "json") {
    emit(o.out, serialize_prefix(prefix));
  } else if (o.format == "dot") {
    emit(o.out, to_dot(prefix));
  } else {
    emit(o.out, to_graph6(underlying_graph(prefix)));
  }
  std::cerr << "built " << prefix.num_vertices() << " vertices in " << prefix.num_layers()
            << " layers\n";
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  std::string in;
  bool rules = false;
  bool holes = false;
  bool clique = false;
  bool minor = false;
  int chordal_samples = -1;
  std::uint64_t seed = 0;
  std::string out;
  std::int64_t size_cap = 0;
};

int run_verify(VerifyOptions o) {
  const std::string text = read_file(o.in);
  WheelPrefix prefix = parse_prefix(text);
  const bool any = o.rules || o.holes || o.clique || o.minor || o.chordal_samples >= 0;
  if (!any) {
    o.rules = o.holes = o.clique = o.minor = true;
    o.chordal_samples = 100;
  }
  Graph g = underlying_graph(prefix);
  Json report;
  report["input"] = o.in;
  report["vertices"] = prefix.num_vertices();
  report["layers"] = prefix.num_layers();
  report["canonical"] = serialize_prefix(prefix) == text;
  bool all = true;

  if (o.rules) {
    RuleReport rules = verify_rules(prefix);
    Json checks = Json::array();
    for (const auto& c : rules.checks) {
      Json item = {{"rule", c.rule}, {"verdict", c.pass ? "pass" : "fail"}};
      if (c.first_violation) {
        item["first_violation"] = Json::array({c.first_violation->layer, c.first_violation->position});
      }
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    report["rules"] = std::move(checks);
    all = all && rules.all_pass();
  }
  if (o.holes) {
    const int ell = prefix.ell();
    auto shortest = shortest_hole_up_to(g, ell);
    const bool pass = shortest && *shortest == ell;
    report["holes"] = {{"bound", ell},
                       {"shortest", shortest ? Json(*shortest) : Json(nullptr)},
                       {"verdict", pass ? "pass" : "fail"}};
    all = all && pass;
  }
  if (o.clique) {
    const int t = prefix.num_layers();
    auto budget = static_cast<std::size_t>(std::max<std::int64_t>(o.size_cap, kDefaultCliqueBudget));
    auto result = clique_number_exact(g, budget);
    const int expected = t >= 2 ? prefix.f()(t) : 2;
    const bool pass = result.size == expected && is_clique(g, result.witness);
    report["clique"] = {{"omega", result.size},
                        {"expected", expected},
                        {"witness", vertices_to_json(prefix, result.witness)},
                        {"verdict", pass ? "pass" : "fail"}};
    all = all && pass;
  }
  if (o.minor) {
    MinorCheck m = layer_minor_check(prefix, g);
    report["minor"] = m.certificate.to_json();
    all = all && m.certificate.pass;
  }
  if (o.chordal_samples > 0) {
    std::mt19937_64 rng(o.seed);
    int passed = 0;
    Json failures = Json::array();
    for (int s = 0; s < o.chordal_samples; ++s) {
      std::vector<Vertex> y;
      for (int layer = 1; layer <= prefix.num_layers(); ++layer) {
        std::uniform_int_distribution<int> pick(0, prefix.layer_size(layer) - 1);
        y.push_back(static_cast<Vertex>(prefix.index(VertexId{layer, pick(rng)})));
      }
      Certificate c = transversal_chordality_check(prefix, g, y);
      if (c.pass) {
        ++passed;
      } else if (failures.size() < 5) {
        failures.push_back(c.to_json());
      }
    }
    const bool pass = passed == o.chordal_samples;
    report["chordal"] = {{"samples", o.chordal_samples},
                         {"seed", o.seed},
                         {"passed", passed},
                         {"failures", std::move(failures)},
                         {"verdict", pass ? "pass" : "fail"}};
    all = all && pass;
  }
  report["verdict"] = all ? "pass" : "fail";
  emit(o.out, json_text(report));
  return all ? 0 : 1;
}

// --------------------------------------------------------------- separate

struct SeparateOptions {
  std::string in;
  std::string target = "all";
  bool emit_decomposition = false;
  std::string dot;
  std::string out;
  std::int64_t size_cap = 0;
};

int run_separate(const SeparateOptions& o) {
  WheelPrefix prefix = load_prefix(o.in);
  Graph g = underlying_graph(prefix);
  std::vector<Vertex> members;
  if (o.target == "all") {
    members.resize(prefix.num_vertices());
    for (std::size_t v = 0; v < members.size(); ++v) members[v] = static_cast<Vertex>(v);
  } else {
    Json j = Json::parse(read_file(o.target));
    members = vertices_from_json(prefix, j.is_object() && j.contains("members") ? j["members"] : j);
  }
  if (members.empty()) throw PreconditionError("target set is empty");
  auto budget = static_cast<std::size_t>(std::max<std::int64_t>(o.size_cap, kDefaultCliqueBudget));
  TargetSet x = make_target_set(prefix, g, members, budget);
  BalancedSeparation sep = balanced_separation(prefix, x);
  const auto& sz = sep.sizes;
  const bool balanced = 3 * sz.a_only <= 2 * sz.n && 3 * sz.b_only <= 2 * sz.n;
  const bool valid = verify_separation(g, sep.separation, x.members);
  const bool bounded = !sep.bound_applies || static_cast<Extended>(sz.order) <= sep.order_bound;
  bool all = balanced && valid && bounded;

  Json report;
  report["k"] = x.k;
  report["n"] = sz.n;
  report["order_bound"] = extended_json(sep.order_bound);
  report["bound_applies"] = sep.bound_applies;
  report["order"] = sz.order;
  report["sizes"] = {{"a", sz.a}, {"b", sz.b}, {"a_only", sz.a_only}, {"b_only", sz.b_only}};
  report["iterations"] = sep.iterations;
  report["balanced"] = balanced;
  report["separation_valid"] = valid;
  report["separation"] = separation_to_json(prefix, sep.separation);
  if (o.emit_decomposition) {
    TreeDecomposition td = decomposition_from_separators(prefix, g, x.members);
    DecompositionCheck check = check_decomposition(g, td, x.members);
    Json d = decomposition_to_json(prefix, td);
    d["valid"] = check.valid();
    d["axioms"] = {{"tree", check.is_tree},
                   {"vertex_coverage", check.vertex_coverage},
                   {"edge_coverage", check.edge_coverage},
                   {"subtree_connectivity", check.subtree_connectivity}};
    try {
      d["independent_width"] = independent_width(td, g);
    } catch (const SolverBudgetError&) {
      d["independent_width"] = nullptr;
    }
    report["decomposition"] = std::move(d);
    all = all && check.valid();
    if (!o.dot.empty()) write_file(o.dot, decomposition_to_dot(prefix, td));
  }
  report["verdict"] = all ? "pass" : "fail";
  emit(o.out, json_text(report));
  return all ? 0 : 1;
}

int run_check_separation(const std::string& in, const std::string& sep_path, const std::string& out) {
  WheelPrefix prefix = load_prefix(in);
  Graph g = underlying_graph(prefix);
  SeparationFile file = separation_from_json(prefix, Json::parse(read_file(sep_path)));
  bool pass = false;
  std::string detail;
  try {
    pass = file.domain.empty() ? verify_separation(g, file.separation)
                               : verify_separation(g, file.separation, file.domain);
  } catch (const PreconditionError& e) {
    detail = e.what();
  }
  Certificate cert;
  cert.kind = "separation";
  cert.pass = pass;
  cert.bound = static_cast<std::int64_t>(file.separation.order());
  cert.data = separation_to_json(prefix, file.separation);
  if (!detail.empty()) cert.data["detail"] = detail;
  emit(out, json_text(cert.to_json()));
  return pass ? 0 : 1;
}

// ------------------------------------------------------------------- demo

int finish_demo(const DemoReport& report, const std::string& out) {
  std::cout << report.table();
  if (out.empty()) {
    std::cout << json_text(report.json);
  } else {
    write_file(out, json_text(report.json));
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered wheel generator and width analysis"};
  app.require_subcommand(1);
  const std::int64_t cap = default_size_cap();

  BuildOptions build;
  build.size_cap = cap;
  auto* build_cmd = app.add_subcommand("build", "Construct a prefix and write it out");
  build_cmd->add_option("--ell", build.ell, "Hole length parameter (>= 4)")->required();
  build_cmd->add_option("--f", build.f, "Slow function spec");
  build_cmd->add_option("--layers", build.layers, "Number of layers")->required();
  build_cmd->add_option("--size-cap", build.size_cap, "Vertex budget");
  build_cmd->add_option("--out", build.out, "Output file (default stdout)");
  build_cmd->add_option("--format", build.format, "json, dot or graph6")
      ->check(CLI::IsMember({"json", "dot", "graph6"}));

  VerifyOptions verify;
  verify.size_cap = cap;
  auto* verify_cmd = app.add_subcommand("verify", "Check a serialized prefix");
  verify_cmd->add_option("--in", verify.in, "Prefix JSON")->required();
  verify_cmd->add_flag("--rules", verify.rules, "Construction rules");
  verify_cmd->add_flag("--holes", verify.holes, "No hole shorter than ell, one of length ell");
  verify_cmd->add_flag("--clique", verify.clique, "Exact clique number equals f(t)");
  verify_cmd->add_flag("--minor", verify.minor, "Layer clique minor");
  verify_cmd->add_option("--chordal-samples", verify.chordal_samples, "Random transversals to check");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--out", verify.out, "Report file (default stdout)");

  SeparateOptions separate;
  separate.size_cap = cap;
  auto* separate_cmd = app.add_subcommand("separate", "Balanced separation of a target set");
  separate_cmd->add_option("--in", separate.in, "Prefix JSON")->required();
  separate_cmd->add_option("--target", separate.target, "'all' or a JSON list of [layer,pos]");
  separate_cmd->add_flag("--emit-decomposition", separate.emit_decomposition,
                         "Also build a tree decomposition from recursive separations");
  separate_cmd->add_option("--dot", separate.dot, "Write the decomposition as DOT");
  separate_cmd->add_option("--out", separate.out, "Report file (default stdout)");

  std::string cs_in, cs_sep, cs_out;
  auto* check_cmd = app.add_subcommand("check-separation", "Check a separation read from a file");
  check_cmd->add_option("--in", cs_in, "Prefix JSON")->required();
  check_cmd->add_option("--separation", cs_sep, "Separation JSON")->required();
  check_cmd->add_option("--out", cs_out, "Report file (default stdout)");

  auto* demo_cmd = app.add_subcommand("demo", "Run a counterexample demo");
  demo_cmd->require_subcommand(1);
  std::uint64_t seed = 0;
  std::string demo_out;
  std::int64_t demo_cap = cap;

  std::string q_g = "poly:2";
  int q_ell = 4, q_kmax = 3;
  auto* q_cmd = demo_cmd->add_subcommand("question84", "Large treewidth at fixed clique number");
  q_cmd->add_option("--g", q_g, "Growth polynomial: poly:<d> or coeffs:<a0,...>");
  q_cmd->add_option("--ell", q_ell, "Hole length parameter");
  q_cmd->add_option("--k-max", q_kmax, "Largest clique number");

  std::string c_F = "poly:2";
  int c_ell = 4, c_cmax = 2;
  auto* c_cmd = demo_cmd->add_subcommand("conjecture85", "Large tree-independence number");
  c_cmd->add_option("--F", c_F, "Cumulative function: poly:<d>, coeffs:<...> or a value list");
  c_cmd->add_option("--ell", c_ell, "Hole length parameter");
  c_cmd->add_option("--c-max", c_cmax, "Largest target c");

  int h_c = 2, h_ell = 5, h_t = 4, h_samples = 50;
  auto* h_cmd = demo_cmd->add_subcommand("hajebi", "Separations of K_c-free subgraphs");
  h_cmd->add_option("--c", h_c, "Forbidden clique size");
  h_cmd->add_option("--ell", h_ell, "Hole length parameter (>= 5)");
  h_cmd->add_option("--t", h_t, "Treewidth target (t+1 layers)");
  h_cmd->add_option("--samples", h_samples, "Number of K_c-free samples");
  for (auto* sub : {q_cmd, c_cmd, h_cmd}) {
    sub->add_option("--seed", seed, "Sampling seed");
    sub->add_option("--out", demo_out, "JSON report file");
    sub->add_option("--size-cap", demo_cap, "Vertex budget");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build_cmd) return run_build(build);
    if (*verify_cmd) return run_verify(verify);
    if (*separate_cmd) return run_separate(separate);
    if (*check_cmd) return run_check_separation(cs_in, cs_sep, cs_out);
    if (*q_cmd) return finish_demo(demo_question84(Polynomial::parse(q_g), q_ell, q_kmax, demo_cap), demo_out);
    if (*c_cmd) {
      auto f = SlowFunction::parse("cumulative:" + c_F);
      return finish_demo(demo_conjecture85(*f.cumulative_definition(), c_ell, c_cmax, demo_cap, seed),
                         demo_out);
    }
    if (*h_cmd) return finish_demo(demo_hajebi(h_c, h_ell, h_t, h_samples, demo_cap, seed), demo_out);
  } catch (const lwheel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
