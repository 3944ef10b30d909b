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

#include "lwheel/slow_function.hpp"

#include <algorithm>

#include "lwheel/error.hpp"
#include "text.hpp"

namespace lwheel {

// ---------------------------------------------------------------- Polynomial

std::int64_t Polynomial::operator()(std::int64_t k) const {
  std::int64_t value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * k + *it;
  return value;
}

Polynomial Polynomial::monomial(int degree) {
  if (degree < 0) throw PreconditionError("polynomial degree must be >= 0");
  Polynomial p;
  p.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coeffs.back() = 1;
  return p;
}

std::string Polynomial::describe() const {
  bool monic = !coeffs.empty() && coeffs.back() == 1 &&
               std::all_of(coeffs.begin(), coeffs.end() - 1,
                           [](std::int64_t c) { return c == 0; });
  if (monic) return "poly:" + std::to_string(coeffs.size() - 1);
  return "coeffs:" + detail::join(coeffs);
}

Polynomial Polynomial::parse(std::string_view text) {
  if (text.starts_with("poly:")) {
    return monomial(static_cast<int>(detail::parse_int(text.substr(5))));
  }
  if (text.starts_with("coeffs:")) text.remove_prefix(7);
  Polynomial p;
  p.coeffs = detail::parse_int_list(text);
  if (p.coeffs.empty()) throw ParseError("empty polynomial");
  return p;
}

// -------------------------------------------------------- CumulativeFunction

CumulativeFunction::CumulativeFunction(std::vector<Extended> prefix, Tail tail,
                                       Polynomial growth)
    : prefix_(std::move(prefix)), tail_(tail), growth_(std::move(growth)) {
  if (prefix_.size() < 2 || prefix_[0] != 1 || prefix_[1] != 2) {
    throw PreconditionError("cumulative function needs F(1)=1 and F(2)=2");
  }
  bool infinite = false;
  for (std::size_t k = 1; k < prefix_.size(); ++k) {
    if (infinite) {
      if (is_finite(prefix_[k])) {
        throw PreconditionError("cumulative function returns from infinity at k=" +
                                std::to_string(k + 1));
      }
      continue;
    }
    if (!is_finite(prefix_[k])) {
      infinite = true;
      continue;
    }
    if (prefix_[k] < prefix_[k - 1] + 1) {
      throw PreconditionError("cumulative function violates F(k+1) >= F(k)+1 at k=" +
                              std::to_string(k));
    }
  }
  if (infinite && tail_ != Tail::kInfinite) {
    throw PreconditionError("cumulative function with an infinite value needs an infinite tail");
  }
  if (tail_ == Tail::kPolynomial && growth_.coeffs.empty()) {
    throw PreconditionError("polynomial tail needs coefficients");
  }
}

CumulativeFunction CumulativeFunction::staircase() {
  return CumulativeFunction({1, 2}, Tail::kSuccessor);
}

CumulativeFunction CumulativeFunction::from_growth(Polynomial g) {
  return CumulativeFunction({1, 2}, Tail::kPolynomial, std::move(g));
}

Extended CumulativeFunction::operator()(std::int64_t k) const {
  if (k < 1) throw PreconditionError("F is defined for k >= 1");
  auto m = static_cast<std::int64_t>(prefix_.size());
  if (k <= m) return prefix_[static_cast<std::size_t>(k - 1)];
  Extended value = prefix_.back();
  if (tail_ == Tail::kInfinite || !is_finite(value)) return kInfinity;
  for (std::int64_t j = m + 1; j <= k; ++j) {
    Extended next = value + 1;
    if (tail_ == Tail::kPolynomial) next = std::max(next, growth_(j) + 1);
    value = next;
  }
  return value;
}

std::optional<std::int64_t> CumulativeFunction::first_infinite() const {
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    if (!is_finite(prefix_[k])) return static_cast<std::int64_t>(k + 1);
  }
  if (tail_ == Tail::kInfinite) return static_cast<std::int64_t>(prefix_.size() + 1);
  return std::nullopt;
}

std::string CumulativeFunction::describe() const {
  if (tail_ == Tail::kPolynomial) return growth_.describe();
  std::string out;
  for (std::size_t k = 0; k < prefix_.size() && is_finite(prefix_[k]); ++k) {
    if (!out.empty()) out += ',';
    out += std::to_string(prefix_[k]);
  }
  if (tail_ == Tail::kSuccessor) out += ",...";
  return out;
}

// -------------------------------------------------------------- SlowFunction

SlowFunction SlowFunction::identity() {
  SlowFunction f;
  f.kind_ = Kind::kIdentity;
  return f;
}

SlowFunction SlowFunction::capped(int cap) {
  if (cap < 3) throw PreconditionError("cap must be >= 3 so that f(3) = 3");
  SlowFunction f;
  f.kind_ = Kind::kCapped;
  f.cap_ = cap;
  return f;
}

SlowFunction SlowFunction::table(std::vector<int> values) {
  SlowFunction f;
  f.kind_ = Kind::kTable;
  f.table_ = std::move(values);
  f.validate();
  return f;
}

SlowFunction SlowFunction::from_cumulative(CumulativeFunction F) {
  SlowFunction f;
  f.kind_ = Kind::kCumulative;
  f.cumulative_ = std::move(F);
  return f;
}

void SlowFunction::validate() const {
  if (kind_ != Kind::kTable) return;
  if (table_.size() < 3 || table_[0] != 1 || table_[1] != 2 || table_[2] != 3) {
    throw PreconditionError("slow function table must start with 1,2,3");
  }
  for (std::size_t i = 1; i < table_.size(); ++i) {
    int step = table_[i] - table_[i - 1];
    if (step != 0 && step != 1) {
      throw PreconditionError("slow function table must step by 0 or 1 (index " +
                              std::to_string(i + 1) + ")");
    }
  }
}

int SlowFunction::operator()(std::int64_t i) const {
  if (i < 1) throw PreconditionError("f is defined for i >= 1");
  switch (kind_) {
    case Kind::kIdentity:
      return static_cast<int>(i);
    case Kind::kCapped:
      return static_cast<int>(std::min<std::int64_t>(i, cap_));
    case Kind::kTable:
      return i <= static_cast<std::int64_t>(table_.size())
                 ? table_[static_cast<std::size_t>(i - 1)]
                 : table_.back();
    case Kind::kCumulative: {
      // min{k : F(k) >= i}; F(k) >= k so the scan stops by k = i.
      for (std::int64_t k = 1;; ++k) {
        if (cumulative_(k) >= i) return static_cast<int>(k);
      }
    }
  }
  throw ConstructionError("unreachable slow function kind");
}

std::optional<int> SlowFunction::limit() const {
  switch (kind_) {
    case Kind::kIdentity:
      return std::nullopt;
    case Kind::kCapped:
      return cap_;
    case Kind::kTable:
      return table_.back();
    case Kind::kCumulative:
      if (auto k = cumulative_.first_infinite()) return static_cast<int>(*k);
      return std::nullopt;
  }
  return std::nullopt;
}

std::string SlowFunction::describe() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kCapped:
      return "cap:" + std::to_string(cap_);
    case Kind::kTable:
      return "table:" + detail::join(table_);
    case Kind::kCumulative:
      return "cumulative:" + cumulative_.describe();
  }
  return {};
}

SlowFunction SlowFunction::parse(std::string_view spec) {
  auto body = [&](std::string_view prefix) { return spec.substr(prefix.size()); };
  if (spec == "identity") return identity();
  if (spec.starts_with("cap:")) {
    return capped(static_cast<int>(detail::parse_int(body("cap:"))));
  }
  if (spec.starts_with("table:")) {
    std::vector<int> values;
    for (auto v : detail::parse_int_list(body("table:"))) values.push_back(static_cast<int>(v));
    return table(std::move(values));
  }
  if (spec.starts_with("question84:")) {
    Polynomial g;
    g.coeffs = detail::parse_int_list(body("question84:"));
    return from_cumulative(CumulativeFunction::from_growth(std::move(g)));
  }
  if (spec.starts_with("cumulative:")) {
    auto rest = body("cumulative:");
    if (rest.starts_with("poly:") || rest.starts_with("coeffs:")) {
      return from_cumulative(CumulativeFunction::from_growth(Polynomial::parse(rest)));
    }
    auto tail = CumulativeFunction::Tail::kInfinite;
    if (rest.ends_with(",...")) {
      tail = CumulativeFunction::Tail::kSuccessor;
      rest.remove_suffix(4);
    }
    std::vector<Extended> values;
    for (auto v : detail::parse_int_list(rest)) values.push_back(v);
    return from_cumulative(CumulativeFunction(std::move(values), tail));
  }
  throw ParseError("unknown slow function spec '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------- conversion

SlowFunction slow_from_cumulative(const CumulativeFunction& F) {
  // The constructor of CumulativeFunction already enforced the invariants.
  return SlowFunction::from_cumulative(F);
}

Extended cumulative_at(const SlowFunction& f, std::int64_t k) {
  if (k < 1) throw PreconditionError("F is defined for k >= 1");
  if (auto limit = f.limit(); limit && k >= *limit) return kInfinity;
  if (const auto* def = f.cumulative_definition()) return (*def)(k);
  std::int64_t i = 1;
  while (f(i + 1) <= k) ++i;
  return i;
}

CumulativeFunction cumulative_from_slow(const SlowFunction& f, int horizon) {
  constexpr Extended kScanCeiling = 50'000'000;
  const auto limit = f.limit();
  std::vector<Extended> values;
  std::int64_t i = 1;
  for (int k = 1;; ++k) {
    if (limit && k >= *limit) {
      values.push_back(kInfinity);
      break;
    }
    if (!limit && k > std::max(horizon, 2)) break;
    // f is non-decreasing, so sup{i : f(i) <= k} is the end of a scan.
    while (f(i + 1) <= k) {
      ++i;
      if (i > kScanCeiling) throw PreconditionError("cumulative scan exceeded ceiling");
    }
    values.push_back(i);
  }
  if (limit) return CumulativeFunction(std::move(values), CumulativeFunction::Tail::kInfinite);
  if (const auto* def = f.cumulative_definition()) {
    // Unbounded cumulative-defined f: the tail rule is part of its description.
    return CumulativeFunction(std::move(values), def->tail(), def->growth());
  }
  return CumulativeFunction(std::move(values), CumulativeFunction::Tail::kSuccessor);
}

}  // namespace lwheel
