// Copyright 2026 The Hyperank Authors
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

#ifndef HYPERANK_COMPOSE_HPP_
#define HYPERANK_COMPOSE_HPP_

// Meet/join composition of unary operators on the scalar pipeline value.
// A match function becomes unary by fixing its task value:
// x -> f(x, task_value). meet(f, g) = f after g (contractive),
// join(f, g) = g after f (expansive).

#include <memory>
#include <string>

#include "hyperank/match.hpp"

namespace hyperank {

enum class CompositionMode { kMeet, kJoin };

class ScalarOperator {
 public:
  static ScalarOperator Identity();
  static ScalarOperator Match(MatchKind kind, double task_value);
  static ScalarOperator Meet(ScalarOperator f, ScalarOperator g);
  static ScalarOperator Join(ScalarOperator f, ScalarOperator g);

  // Throws Error(kDomain) with the composition path of the failing leaf,
  // e.g. "meet.right/log-ratio(t=2)".
  double operator()(double x) const;

  std::string Describe() const;

 private:
  struct Node;
  explicit ScalarOperator(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  static double Apply(const Node& node, double x, const std::string& path);

  std::shared_ptr<const Node> node_;
};

inline double Compose(const ScalarOperator& op, double x) { return op(x); }

}  // namespace hyperank

#endif  // HYPERANK_COMPOSE_HPP_
