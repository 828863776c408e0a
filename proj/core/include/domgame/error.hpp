// Copyright 2026 The domgame Authors
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

namespace domgame {

/// Malformed input: forest files, generator parameters, CLI configuration.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A move or query that the current game position does not admit.
class GameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A strategy precondition was breached (e.g. an ambiguous dangerous pair).
class StrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Search limits (vertex cap, traversal budget) exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domgame
