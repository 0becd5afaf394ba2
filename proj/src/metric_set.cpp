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

#include "hyperank/metric_set.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hyperank/error.hpp"

namespace hyperank {

using nlohmann::json;

MetricSet MetricSet::Scaled(double factor) const {
  MetricSet out = *this;
  for (MetricEntry& e : out.entries) e.mu *= factor;
  return out;
}

MetricSet AppendixPreset() {
  return {{{"cpu", MatchKind::kRatioMinMax, 1.0},
           {"ram", MatchKind::kSaturatingRatio, 1.0},
           {"storage", MatchKind::kLogRatio, 1.0},
           {"bandwidth", MatchKind::kBandwidthShift, 1.0},
           {"latency", MatchKind::kLatencyInverse, 1.0}}};
}

MetricSet SchedulingPreset() {
  return {{{"cpu", MatchKind::kRatioMinMax, 1.0},
           {"ram", MatchKind::kSaturatingRatio, 1.0},
           {"exec_time", MatchKind::kLatencyInverse, 1.0}}};
}

MetricSet Preset(std::string_view name) {
  if (name == "appendix") return AppendixPreset();
  if (name == "scheduling") return SchedulingPreset();
  throw Error(ErrorKind::kConfiguration,
              "unknown metric preset '" + std::string(name) + "'");
}

MetricSet MetricSetFromJson(const json& value) {
  if (value.is_string()) return Preset(value.get<std::string>());
  if (value.is_object()) {
    if (auto preset = value.find("preset"); preset != value.end()) {
      if (!preset->is_string()) {
        throw Error(ErrorKind::kConfiguration, "metrics.preset must be a string");
      }
      return Preset(preset->get<std::string>());
    }
    if (auto metrics = value.find("metrics"); metrics != value.end()) {
      return MetricSetFromJson(*metrics);
    }
    throw Error(ErrorKind::kConfiguration,
                "metric block needs a 'preset' or 'metrics' field");
  }
  if (!value.is_array()) {
    throw Error(ErrorKind::kConfiguration, "metric block must be an array");
  }
  MetricSet m;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& item = value[i];
    const std::string path = "metrics[" + std::to_string(i) + "]";
    if (!item.is_object() || !item.contains("attribute") ||
        !item.contains("function") || !item["attribute"].is_string() ||
        !item["function"].is_string()) {
      throw Error(ErrorKind::kConfiguration,
                  path + " needs string fields 'attribute' and 'function'");
    }
    MetricEntry entry;
    entry.attribute = item["attribute"].get<std::string>();
    const std::string fn = item["function"].get<std::string>();
    const auto kind = ParseMatchKind(fn);
    if (!kind) {
      throw Error(ErrorKind::kConfiguration,
                  path + ".function: unknown match function '" + fn + "'");
    }
    entry.function = *kind;
    if (item.contains("mu")) {
      if (!item["mu"].is_number()) {
        throw Error(ErrorKind::kConfiguration, path + ".mu must be a number");
      }
      entry.mu = item["mu"].get<double>();
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

json ToJson(const MetricSet& m) {
  json out = json::array();
  for (const MetricEntry& e : m.entries) {
    out.push_back({{"attribute", e.attribute},
                   {"function", std::string(ToString(e.function))},
                   {"mu", e.mu}});
  }
  return out;
}

std::vector<ResolvedTerm> Resolve(const MetricSet& m,
                                  const AttributeSchema& schema) {
  std::vector<ResolvedTerm> terms;
  std::unordered_set<std::string> seen;
  bool any_positive = false;
  for (const MetricEntry& e : m.entries) {
    if (!seen.insert(e.attribute).second) {
      throw Error(ErrorKind::kConfiguration,
                  "metric set lists attribute '" + e.attribute + "' twice");
    }
    if (!std::isfinite(e.mu) || e.mu < 0.0) {
      throw Error(ErrorKind::kConfiguration,
                  "metric weight for '" + e.attribute + "' must be finite and >= 0");
    }
    any_positive |= e.mu > 0.0;
    const auto index = schema.IndexOf(e.attribute);
    if (!index) {
      throw Error(ErrorKind::kConfiguration,
                  "metric attribute '" + e.attribute + "' is not in the schema");
    }
    if (schema.attributes[*index].kind == AttributeKind::kCost) {
      throw Error(ErrorKind::kConfiguration,
                  "metric attribute '" + e.attribute +
                      "' has kind cost; cost enters through the node weight");
    }
    terms.push_back({*index, e.function, e.mu});
  }
  if (!any_positive) {
    throw Error(ErrorKind::kConfiguration,
                "metric set needs at least one entry with mu > 0");
  }
  return terms;
}

double Tensor(std::span<const ResolvedTerm> terms, const ResourceNode& node,
              const TaskEdge& edge) {
  double total = 0.0;
  for (const ResolvedTerm& term : terms) {
    total += term.mu * MatchScore(term.function, node.metadata[term.index],
                                  edge.requirement[term.index]);
  }
  return total;
}

double Tensor(const AttributeSchema& schema, const ResourceNode& node,
              const TaskEdge& edge, const MetricSet& m) {
  const auto terms = Resolve(m, schema);
  return Tensor(terms, node, edge);
}

double BoundM(const AttributeSchema& schema, const TaskEdge& edge,
              std::span<const ResourceNode* const> selected,
              const MetricSet& m) {
  if (selected.empty()) {
    throw Error(ErrorKind::kUsage, "BoundM needs a non-empty selection");
  }
  const auto terms = Resolve(m, schema);
  double best = 0.0;
  bool first = true;
  for (const ResourceNode* node : selected) {
    double envelope = 0.0;
    for (const ResolvedTerm& term : terms) {
      envelope += term.mu * std::abs(MatchScore(term.function,
                                                node->metadata[term.index],
                                                edge.requirement[term.index]));
    }
    if (first || envelope > best) best = envelope;
    first = false;
  }
  return best;
}

}  // namespace hyperank
