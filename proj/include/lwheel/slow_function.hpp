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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lwheel {

/// Extended positive integer: values of a cumulative function may be +inf.
using Extended = std::int64_t;
inline constexpr Extended kInfinity = std::numeric_limits<Extended>::max();

inline bool is_finite(Extended x) { return x != kInfinity; }

/// Integer polynomial g(k) = sum_j coeffs[j] * k^j, used to grow cumulative
/// functions as F(k) = max(F(k-1) + 1, g(k) + 1).
struct Polynomial {
  std::vector<std::int64_t> coeffs;

  std::int64_t operator()(std::int64_t k) const;
  /// `poly:<d>` for k^d, otherwise `coeffs:a0,a1,...`.
  std::string describe() const;
  static Polynomial monomial(int degree);
  static Polynomial parse(std::string_view text);
};

/// The cumulative function F of a slow function, F(k) = sup{i : f(i) <= k}.
///
/// F is stored as an explicit prefix F(1..m) followed by a tail rule for k > m.
/// Once the tail is infinite F stays infinite.
class CumulativeFunction {
 public:
  enum class Tail {
    kInfinite,    // F(k) = +inf for k > m
    kSuccessor,   // F(k) = F(k-1) + 1
    kPolynomial,  // F(k) = max(F(k-1) + 1, g(k) + 1)
  };

  CumulativeFunction() = default;
  /// Throws PreconditionError unless the values satisfy F(1)=1, F(2)=2 and
  /// F(k+1) >= F(k) + 1 with infinity absorbing.
  CumulativeFunction(std::vector<Extended> prefix, Tail tail,
                     Polynomial growth = {});

  /// F(k) = k.
  static CumulativeFunction staircase();
  /// F(1)=1, F(2)=2, F(k) = max(F(k-1)+1, g(k)+1) for k >= 3.
  static CumulativeFunction from_growth(Polynomial g);

  Extended operator()(std::int64_t k) const;

  std::span<const Extended> explicit_values() const { return prefix_; }
  Tail tail() const { return tail_; }
  const Polynomial& growth() const { return growth_; }

  /// Smallest k with F(k) = +inf, if any.
  std::optional<std::int64_t> first_infinite() const;

  std::string describe() const;

  friend bool operator==(const CumulativeFunction&,
                         const CumulativeFunction&) = default;

 private:
  std::vector<Extended> prefix_;
  Tail tail_ = Tail::kSuccessor;
  Polynomial growth_;
};

/// A slow function: f(1)=1, f(2)=2, f(3)=3, f(i) <= f(i+1) <= f(i)+1.
///
/// Only finitely describable families are representable: capped identity
/// min(i, c), the identity, an explicit table whose last value repeats, and
/// functions defined through their cumulative function.
class SlowFunction {
 public:
  enum class Kind { kIdentity, kCapped, kTable, kCumulative };

  static SlowFunction identity();
  static SlowFunction capped(int cap);
  static SlowFunction table(std::vector<int> values);
  static SlowFunction from_cumulative(CumulativeFunction F);

  /// Parses `identity`, `cap:<c>`, `table:<v1,...>`, `cumulative:<list>`,
  /// `cumulative:poly:<d>`, `cumulative:coeffs:<a0,...>`, `question84:<a0,...>`.
  static SlowFunction parse(std::string_view spec);

  int operator()(std::int64_t i) const;

  /// Eventual constant value, or nullopt when f is unbounded.
  std::optional<int> limit() const;

  Kind kind() const { return kind_; }
  /// The defining F when kind() == kCumulative, otherwise null.
  const CumulativeFunction* cumulative_definition() const {
    return kind_ == Kind::kCumulative ? &cumulative_ : nullptr;
  }
  /// Canonical textual form; parse(describe()) reproduces *this.
  std::string describe() const;

 private:
  SlowFunction() = default;
  void validate() const;

  Kind kind_ = Kind::kIdentity;
  int cap_ = 0;
  std::vector<int> table_;
  CumulativeFunction cumulative_;
  std::string label_;
};

/// f(i) = min{k : F(k) >= i}. Rejects F that violates the cumulative
/// invariants.
SlowFunction slow_from_cumulative(const CumulativeFunction& F);

/// Computes F(k) = sup{i : f(i) <= k} by scanning f. Explicit values are
/// produced up to the first infinite value, or up to `horizon` when f is
/// unbounded; beyond that the tail rule of f's description applies.
CumulativeFunction cumulative_from_slow(const SlowFunction& f,
                                        int horizon = 12);

/// F(k) = sup{i : f(i) <= k} evaluated directly from f.
Extended cumulative_at(const SlowFunction& f, std::int64_t k);

}  // namespace lwheel
