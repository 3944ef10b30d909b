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

#include "lwheel/demos.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "lwheel/error.hpp"
#include "lwheel/structure.hpp"
#include "lwheel/width.hpp"

namespace lwheel {

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string cell(Extended v) { return is_finite(v) ? std::to_string(v) : "inf"; }

Json row_json(const DemoRow& row, const std::string& param) {
  Json j;
  j[param] = row.k;
  j["omega"] = row.omega ? Json(*row.omega) : Json(nullptr);
  j["tw_lower"] = row.tw_lower ? Json(*row.tw_lower) : Json(nullptr);
  j["tw_upper_formula"] = extended_json(row.tw_upper_formula);
  j["ta_lower"] = row.ta_lower ? Json(*row.ta_lower) : Json(nullptr);
  j["status"] = row.status;
  return j;
}

Json rows_json(const std::vector<DemoRow>& rows, const std::string& param) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(row_json(r, param));
  return j;
}

std::size_t solver_budget(std::int64_t size_cap) {
  return static_cast<std::size_t>(std::max<std::int64_t>(size_cap, kDefaultCliqueBudget));
}

}  // namespace

std::string DemoReport::table() const {
  std::ostringstream out;
  out << name << "\n";
  out << std::left << std::setw(6) << param << std::setw(8) << "omega" << std::setw(10) << "tw_lower"
      << std::setw(18) << "tw_upper_formula" << std::setw(10) << "ta_lower"
      << "status\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(6) << r.k << std::setw(8) << cell(r.omega) << std::setw(10)
        << cell(r.tw_lower) << std::setw(18) << cell(r.tw_upper_formula) << std::setw(10)
        << cell(r.ta_lower) << r.status << "\n";
  }
  out << "verdict: " << (pass ? "pass" : "fail") << "\n";
  return out.str();
}

// ------------------------------------------------------------ question84

DemoReport demo_question84(const Polynomial& g, int ell, int k_max, std::int64_t size_cap) {
  if (k_max < 3) throw PreconditionError("k_max must be >= 3");
  DemoReport report;
  report.name = "question84";
  const CumulativeFunction F = CumulativeFunction::from_growth(g);
  const SlowFunction f = SlowFunction::from_cumulative(F);

  Json details = Json::array();
  DemoRow k2;
  k2.k = 2;
  k2.status = "out of scope";
  report.rows.push_back(k2);
  details.push_back({{"k", 2}, {"status", "out of scope"},
                     {"reason", "the k = 2 case needs a separate triangle-free construction"}});

  bool all = true;
  for (int k = 3; k <= k_max; ++k) {
    DemoRow row;
    row.k = k;
    const Extended layers = F(k);
    const std::int64_t target = g(k);
    Json detail = {{"k", k}, {"F(k)", extended_json(layers)}, {"g(k)", target}};
    row.tw_upper_formula = tw_upper_bound_formula(ell, f, k);
    try {
      if (!is_finite(layers) || layers > size_cap) throw SizeBudgetError("layer count exceeds cap");
      WheelPrefix prefix = build_prefix(ell, f, static_cast<int>(layers), size_cap);
      Graph graph = underlying_graph(prefix);
      auto clique = clique_number_exact(graph, solver_budget(size_cap));
      MinorCheck minor = layer_minor_check(prefix, graph);
      row.omega = clique.size;
      row.tw_lower = minor.lower_bound;
      auto ta = ta_lower_bound_certified(prefix, graph, 4, 0, solver_budget(size_cap));
      row.ta_lower = ta.value;
      const bool ok = clique.size == k && is_clique(graph, clique.witness) &&
                      minor.certificate.pass && minor.lower_bound >= target && ta.pass;
      row.status = ok ? "ok" : "fail";
      all = all && ok;
      detail["vertices"] = prefix.num_vertices();
      detail["clique"] = {{"size", clique.size}, {"witness", clique.witness}};
      detail["minor"] = minor.certificate.to_json();
      detail["tw_lower"] = minor.lower_bound;
      detail["ta"] = ta.to_json();
    } catch (const SizeBudgetError& e) {
      row.status = "size cap";
      detail["skipped"] = e.what();
    }
    detail["tw_upper_formula"] = extended_json(row.tw_upper_formula);
    detail["status"] = row.status;
    details.push_back(std::move(detail));
    report.rows.push_back(row);
  }
  report.pass = all && std::any_of(report.rows.begin(), report.rows.end(),
                                   [](const DemoRow& r) { return r.status == "ok"; });
  report.json = {{"demo", "question84"},
                 {"g", g.describe()},
                 {"ell", ell},
                 {"k_max", k_max},
                 {"size_cap", size_cap},
                 {"F", F.describe()},
                 {"rows", rows_json(report.rows, report.param)},
                 {"details", std::move(details)},
                 {"verdict", report.pass ? "pass" : "fail"}};
  return report;
}

// ----------------------------------------------------------- conjecture85

DemoReport demo_conjecture85(const CumulativeFunction& F, int ell, int c_max,
                             std::int64_t size_cap, std::uint64_t seed) {
  if (c_max < 1) throw PreconditionError("c_max must be >= 1");
  DemoReport report;
  report.name = "conjecture85";
  report.param = "c";
  const SlowFunction f = SlowFunction::from_cumulative(F);
  Json details = Json::array();
  bool all = true;
  for (int c = 1; c <= c_max; ++c) {
    DemoRow row;
    row.k = c;
    Json detail = {{"c", c}};
    // Least k >= 2 with F(k) >= ck; a single layer is a cycle, whose clique
    // number is 2 rather than f(1).
    std::optional<int> k;
    for (int cand = 2; cand <= 64; ++cand) {
      const Extended value = F(cand);
      if (!is_finite(value) || value > size_cap) break;
      if (value >= static_cast<Extended>(c) * cand) {
        k = cand;
        break;
      }
    }
    if (!k) {
      row.status = "size cap";
      detail["skipped"] = "no k with F(k) >= ck within the size cap";
      all = false;
    } else {
      const int layers = static_cast<int>(F(*k));
      detail["k"] = *k;
      detail["layers"] = layers;
      try {
        WheelPrefix prefix = build_prefix(ell, f, layers, size_cap);
        Graph graph = underlying_graph(prefix);
        auto ta = ta_lower_bound_certified(prefix, graph, 8, seed, solver_budget(size_cap));
        row.omega = ta.k;
        row.tw_lower = ta.minor.lower_bound;
        row.ta_lower = ta.value;
        row.tw_upper_formula = tw_upper_bound_formula(ell, f, ta.k);
        const bool ok = ta.pass && ta.k == *k && ta.value >= c;
        row.status = ok ? "ok" : "fail";
        all = all && ok;
        detail["vertices"] = prefix.num_vertices();
        detail["ta"] = ta.to_json();
        detail["tw_upper_stated"] = extended_json(tw_upper_bound_formula_stated(ell, f, ta.k));
      } catch (const SizeBudgetError& e) {
        row.status = "size cap";
        detail["skipped"] = e.what();
        all = false;
      }
    }
    detail["status"] = row.status;
    details.push_back(std::move(detail));
    report.rows.push_back(row);
  }
  report.pass = all;
  report.json = {{"demo", "conjecture85"},
                 {"F", F.describe()},
                 {"ell", ell},
                 {"c_max", c_max},
                 {"size_cap", size_cap},
                 {"seed", seed},
                 {"rows", rows_json(report.rows, report.param)},
                 {"details", std::move(details)},
                 {"verdict", report.pass ? "pass" : "fail"}};
  return report;
}

// ------------------------------------------------------ bounded clique

std::vector<Vertex> sample_kc_free(const Graph& g, int c, std::mt19937_64& rng) {
  if (c < 2) throw PreconditionError("c must be >= 2");
  if (g.size() == 0) throw PreconditionError("graph is empty");
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double keep = 0.25 + 0.75 * unit(rng);

  std::vector<char> chosen(g.size(), 0);
  std::vector<Vertex> picked;
  for (Vertex v : order) {
    if (!picked.empty() && unit(rng) > keep) continue;
    std::vector<Vertex> nb;
    for (Vertex w : g.neighbors(v)) {
      if (chosen[static_cast<std::size_t>(w)]) nb.push_back(w);
    }
    // Adding v creates K_c iff its chosen neighbors contain K_{c-1}.
    if (!nb.empty() && kernels::serial::max_clique(induced_subgraph(g, nb)).size >= c - 1) continue;
    chosen[static_cast<std::size_t>(v)] = 1;
    picked.push_back(v);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

DemoReport demo_hajebi(int c, int ell, int t, int samples, std::int64_t size_cap,
                       std::uint64_t seed) {
  if (c < 2) throw PreconditionError("c must be >= 2");
  if (ell < 5) throw PreconditionError("ell must be >= 5");
  if (t < 1) throw PreconditionError("t must be >= 1");
  DemoReport report;
  report.name = "hajebi";
  report.param = "c";
  const SlowFunction f = SlowFunction::capped(std::max(c + 1, 3));
  WheelPrefix prefix = build_prefix(ell, f, t + 1, size_cap);
  Graph graph = underlying_graph(prefix);
  auto clique = clique_number_exact(graph, solver_budget(size_cap));
  MinorCheck minor = layer_minor_check(prefix, graph);

  DemoRow row;
  row.k = c;
  row.omega = clique.size;
  row.tw_lower = minor.lower_bound;
  row.tw_upper_formula = tw_upper_bound_formula(ell, f, c - 1);
  const bool prefix_ok = clique.size == std::min(c + 1, t + 1) && minor.certificate.pass &&
                         minor.lower_bound >= t;

  std::mt19937_64 rng(seed);
  Json sample_json = Json::array();
  bool samples_ok = true;
  int within = 0;
  std::size_t worst_order = 0;
  for (int s = 0; s < samples; ++s) {
    std::vector<Vertex> members = sample_kc_free(graph, c, rng);
    TargetSet x = make_target_set(prefix, graph, members, solver_budget(size_cap));
    BalancedSeparation sep = balanced_separation(prefix, x);
    const auto& sz = sep.sizes;
    const bool balanced = 3 * sz.a_only <= 2 * sz.n && 3 * sz.b_only <= 2 * sz.n;
    const bool valid = verify_separation(graph, sep.separation, x.members);
    const bool bounded = sep.bound_applies && static_cast<Extended>(sz.order) <= sep.order_bound;
    const bool ok = x.k <= c - 1 && balanced && valid && bounded;
    within += bounded;
    worst_order = std::max(worst_order, sz.order);
    samples_ok = samples_ok && ok;
    sample_json.push_back({{"n", sz.n},
                           {"k", x.k},
                           {"order", sz.order},
                           {"order_bound", extended_json(sep.order_bound)},
                           {"a_only", sz.a_only},
                           {"b_only", sz.b_only},
                           {"iterations", sep.iterations},
                           {"verdict", ok ? "pass" : "fail"}});
  }
  row.status = prefix_ok && samples_ok ? "ok" : "fail";
  report.rows.push_back(row);
  report.pass = prefix_ok && samples_ok;
  report.json = {{"demo", "hajebi"},
                 {"c", c},
                 {"ell", ell},
                 {"t", t},
                 {"f", f.describe()},
                 {"samples", samples},
                 {"seed", seed},
                 {"vertices", prefix.num_vertices()},
                 {"clique", {{"size", clique.size}, {"witness", clique.witness}}},
                 {"minor", minor.certificate.to_json()},
                 {"tw_lower", minor.lower_bound},
                 {"samples_within_bound", within},
                 {"max_order", worst_order},
                 {"sample_reports", std::move(sample_json)},
                 {"rows", rows_json(report.rows, report.param)},
                 {"verdict", report.pass ? "pass" : "fail"}};
  return report;
}

}  // namespace lwheel
