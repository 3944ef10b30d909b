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

#include <stdexcept>
#include <string>

namespace lwheel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The next layer would push the prefix past its vertex budget.
class SizeBudgetError : public Error {
 public:
  using Error::Error;
};

// An exact solver was asked to work on a graph above its vertex budget.
class SolverBudgetError : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken during construction; always a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The separation improvement loop failed to make progress; always a bug.
class ProgressError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwheel
