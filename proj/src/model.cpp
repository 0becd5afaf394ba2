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

#include "hyperank/model.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_set>

namespace hyperank {
namespace {

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void CheckVector(const AttributeSchema& schema, const MetadataVector& values,
                 const std::string& path,
                 ValidationReport& report) {
  if (values.size() != schema.size()) {
    report.push_back({path, "length " + std::to_string(values.size()) +
                                " does not match schema length " +
                                std::to_string(schema.size())});
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Attribute& attr = schema.attributes[i];
    const double x = values[i];
    const std::string at = path + "[" + attr.name + "]";
    if (!std::isfinite(x)) {
      report.push_back({at, "value must be finite"});
    } else if (attr.kind == AttributeKind::kLatencyLike && !(x > 0.0)) {
      report.push_back({at, "latency-like value must be > 0, got " +
                                FormatNumber(x)});
    } else if (attr.kind != AttributeKind::kLatencyLike && x < 0.0) {
      report.push_back({at, std::string(ToString(attr.kind)) +
                                " value must be >= 0, got " + FormatNumber(x)});
    }
  }
}

}  // namespace

std::string_view ToString(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kCapacity: return "capacity";
    case AttributeKind::kLatencyLike: return "latency-like";
    case AttributeKind::kCost: return "cost";
  }
  return "capacity";
}

std::optional<AttributeKind> ParseAttributeKind(std::string_view text) {
  if (text == "capacity") return AttributeKind::kCapacity;
  if (text == "latency-like") return AttributeKind::kLatencyLike;
  if (text == "cost") return AttributeKind::kCost;
  return std::nullopt;
}

std::optional<std::size_t> AttributeSchema::IndexOf(
    std::string_view name) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> AttributeSchema::CostIndex() const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].kind == AttributeKind::kCost) return i;
  }
  return std::nullopt;
}

std::unordered_map<std::string, std::size_t> Hypergraph::NodeIndex() const {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].id, i);
  return index;
}

ValidationReport Validate(const Hypergraph& h) {
  ValidationReport report;

  std::unordered_set<std::string> names;
  std::size_t cost_count = 0;
  for (std::size_t i = 0; i < h.schema.size(); ++i) {
    const Attribute& attr = h.schema.attributes[i];
    const std::string path = "schema[" + std::to_string(i) + "]";
    if (attr.name.empty()) {
      report.push_back({path, "attribute name must be non-empty"});
    } else if (!names.insert(attr.name).second) {
      report.push_back({path, "duplicate attribute name '" + attr.name + "'"});
    }
    if (attr.kind == AttributeKind::kCost) ++cost_count;
  }
  if (cost_count > 1) {
    report.push_back({"schema", "at most one attribute may have kind cost, found " +
                                    std::to_string(cost_count)});
  }
  const std::optional<std::size_t> cost = h.schema.CostIndex();

  std::unordered_set<std::string> ids;
  for (const ResourceNode& node : h.nodes) {
    const std::string path = "nodes[" + node.id + "]";
    if (node.id.empty()) {
      report.push_back({path, "node id must be non-empty"});
    } else if (!ids.insert(node.id).second) {
      report.push_back({path, "duplicate node id '" + node.id + "'"});
    }
    CheckVector(h.schema, node.metadata, path + ".metadata", report);
    if (!std::isfinite(node.weight) || node.weight < 0.0) {
      report.push_back({path + ".weight",
                        "weight must be finite and >= 0, got " +
                            FormatNumber(node.weight)});
    } else if (cost && node.metadata.size() == h.schema.size() &&
               node.metadata[*cost] != node.weight) {
      report.push_back({path + ".weight",
                        "weight " + FormatNumber(node.weight) +
                            " differs from cost attribute '" +
                            h.schema.attributes[*cost].name + "' value " +
                            FormatNumber(node.metadata[*cost])});
    }
  }

  std::unordered_set<std::string> edge_ids;
  for (const TaskEdge& edge : h.edges) {
    const std::string path = "edges[" + edge.id + "]";
    if (edge.id.empty()) {
      report.push_back({path, "edge id must be non-empty"});
    } else if (!edge_ids.insert(edge.id).second) {
      report.push_back({path, "duplicate edge id '" + edge.id + "'"});
    }
    CheckVector(h.schema, edge.requirement, path + ".requirement", report);
    if (edge.k < 1) {
      report.push_back({path + ".k", "k must be ≥ 1, got " +
                                         std::to_string(edge.k)});
    }
    if (edge.members) {
      std::unordered_set<std::string> seen;
      for (const std::string& member : *edge.members) {
        if (!seen.insert(member).second) {
          report.push_back({path + ".members",
                            "duplicate member '" + member + "'"});
        }
        if (!ids.contains(member)) {
          report.push_back({path + ".members",
                            "member '" + member + "' does not resolve to a node"});
        }
      }
      if (edge.k >= 1 && static_cast<std::size_t>(edge.k) > seen.size()) {
        report.push_back({path + ".k", "k = " + std::to_string(edge.k) +
                                           " exceeds member count " +
                                           std::to_string(seen.size())});
      }
    }
  }
  return report;
}

std::vector<std::size_t> CandidateIndices(const Hypergraph& h,
                                          const TaskEdge& edge) {
  std::vector<std::size_t> out;
  if (!edge.members) {
    out.resize(h.nodes.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
  std::unordered_set<std::string_view> members(edge.members->begin(),
                                               edge.members->end());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (members.contains(h.nodes[i].id)) out.push_back(i);
  }
  return out;
}

}  // namespace hyperank
