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

#include "hyperank/compose.hpp"

#include <cstdio>

#include "hyperank/error.hpp"

namespace hyperank {

struct ScalarOperator::Node {
  enum class Tag { kIdentity, kMatch, kMeet, kJoin } tag;
  MatchKind kind = MatchKind::kRatioMinMax;
  double task_value = 0.0;
  std::shared_ptr<const Node> left, right;
};

namespace {

std::string LeafName(MatchKind kind, double task_value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(t=%g)", task_value);
  return std::string(ToString(kind)) + buf;
}

}  // namespace

ScalarOperator ScalarOperator::Identity() {
  return ScalarOperator(std::make_shared<const Node>(Node{Node::Tag::kIdentity, MatchKind::kRatioMinMax, 0.0, nullptr, nullptr}));
}

ScalarOperator ScalarOperator::Match(MatchKind kind, double task_value) {
  return ScalarOperator(std::make_shared<const Node>(
      Node{Node::Tag::kMatch, kind, task_value, nullptr, nullptr}));
}

ScalarOperator ScalarOperator::Meet(ScalarOperator f, ScalarOperator g) {
  return ScalarOperator(std::make_shared<const Node>(
      Node{Node::Tag::kMeet, MatchKind::kRatioMinMax, 0.0, f.node_, g.node_}));
}

ScalarOperator ScalarOperator::Join(ScalarOperator f, ScalarOperator g) {
  return ScalarOperator(std::make_shared<const Node>(
      Node{Node::Tag::kJoin, MatchKind::kRatioMinMax, 0.0, f.node_, g.node_}));
}

double ScalarOperator::Apply(const Node& node, double x,
                             const std::string& path) {
  switch (node.tag) {
    case Node::Tag::kIdentity:
      return x;
    case Node::Tag::kMatch:
      if (!InDomain(node.kind, x, node.task_value)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " outside domain at x=%.17g", x);
        throw Error(ErrorKind::kDomain,
                    path + LeafName(node.kind, node.task_value) + buf);
      }
      return formula::Evaluate(node.kind, x, node.task_value);
    case Node::Tag::kMeet: {
      const double inner = Apply(*node.right, x, path + "meet.right/");
      return Apply(*node.left, inner, path + "meet.left/");
    }
    case Node::Tag::kJoin: {
      const double inner = Apply(*node.left, x, path + "join.left/");
      return Apply(*node.right, inner, path + "join.right/");
    }
  }
  return x;
}

double ScalarOperator::operator()(double x) const {
  return Apply(*node_, x, "");
}

std::string ScalarOperator::Describe() const {
  struct Printer {
    static std::string Run(const Node& n) {
      switch (n.tag) {
        case Node::Tag::kIdentity: return "id";
        case Node::Tag::kMatch: return LeafName(n.kind, n.task_value);
        case Node::Tag::kMeet:
          return "meet(" + Run(*n.left) + ", " + Run(*n.right) + ")";
        case Node::Tag::kJoin:
          return "join(" + Run(*n.left) + ", " + Run(*n.right) + ")";
      }
      return "?";
    }
  };
  return Printer::Run(*node_);
}

}  // namespace hyperank
