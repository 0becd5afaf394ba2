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

#ifndef HYPERANK_MODEL_HPP_
#define HYPERANK_MODEL_HPP_

// Hypergraph data model: a schema of named attributes, resource nodes
// carrying metadata vectors and a cost weight, and task hyperedges carrying
// requirement vectors, a demanded count k and an optional member set.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperank/error.hpp"

namespace hyperank {

enum class AttributeKind { kCapacity, kLatencyLike, kCost };

std::string_view ToString(AttributeKind kind);
std::optional<AttributeKind> ParseAttributeKind(std::string_view text);

struct Attribute {
  std::string name;
  std::string unit;
  AttributeKind kind = AttributeKind::kCapacity;

  bool operator==(const Attribute&) const = default;
};

struct AttributeSchema {
  std::vector<Attribute> attributes;

  std::size_t size() const { return attributes.size(); }
  std::optional<std::size_t> IndexOf(std::string_view name) const;
  // Position of the cost-kind attribute, if the schema declares one.
  std::optional<std::size_t> CostIndex() const;

  bool operator==(const AttributeSchema&) const = default;
};

// Positionally aligned with an AttributeSchema.
using MetadataVector = std::vector<double>;

struct ResourceNode {
  std::string id;
  MetadataVector metadata;
  double weight = 0.0;

  bool operator==(const ResourceNode&) const = default;
};

struct TaskEdge {
  std::string id;
  MetadataVector requirement;
  int k = 1;
  std::optional<std::vector<std::string>> members;

  bool operator==(const TaskEdge&) const = default;
};

struct Hypergraph {
  AttributeSchema schema;
  std::vector<ResourceNode> nodes;
  std::vector<TaskEdge> edges;

  // id -> position in `nodes`. Duplicate ids keep the first occurrence.
  std::unordered_map<std::string, std::size_t> NodeIndex() const;

  bool operator==(const Hypergraph&) const = default;
};

// Checks every model invariant. Violations are data: the report is empty
// exactly when the instance is valid.
ValidationReport Validate(const Hypergraph& h);

// Positions of the candidate nodes of `edge`: its members when present
// (in node order), otherwise every node. Unknown member ids are skipped.
std::vector<std::size_t> CandidateIndices(const Hypergraph& h,
                                          const TaskEdge& edge);

}  // namespace hyperank

#endif  // HYPERANK_MODEL_HPP_
