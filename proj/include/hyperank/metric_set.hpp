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

#ifndef HYPERANK_METRIC_SET_HPP_
#define HYPERANK_METRIC_SET_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperank/match.hpp"
#include "hyperank/model.hpp"
#include "json.hpp"

namespace hyperank {

struct MetricEntry {
  std::string attribute;
  MatchKind function = MatchKind::kRatioMinMax;
  double mu = 1.0;

  bool operator==(const MetricEntry&) const = default;
};

// The operator family: one weighted matching function per attribute.
struct MetricSet {
  std::vector<MetricEntry> entries;

  // Copy with every weight multiplied by `factor`.
  MetricSet Scaled(double factor) const;

  bool operator==(const MetricSet&) const = default;
};

// cpu: ratio-minmax, ram: saturating-ratio, storage: log-ratio,
// bandwidth: bandwidth-shift, latency: latency-inverse; unit weights.
MetricSet AppendixPreset();

// cpu: ratio-minmax, ram: saturating-ratio, exec_time: latency-inverse;
// unit weights. A VM whose reference execution time is short relative to the
// task's is preferred.
MetricSet SchedulingPreset();

// "appendix" or "scheduling"; throws Error(kConfiguration) otherwise.
MetricSet Preset(std::string_view name);

// Accepts [{"attribute","function","mu"}...], {"metrics": [...]} or
// {"preset": "appendix"}.
MetricSet MetricSetFromJson(const nlohmann::json& value);
nlohmann::json ToJson(const MetricSet& m);

// A MetricSet bound to a schema: attribute names replaced by positions.
struct ResolvedTerm {
  std::size_t index;
  MatchKind function;
  double mu;
};

// Checks the MetricSet invariants (distinct attributes, finite mu >= 0, at
// least one mu > 0) and resolves names against `schema`. Throws
// Error(kConfiguration). Cost-kind attributes are rejected: they live in the
// weight, not in the match dimensions.
std::vector<ResolvedTerm> Resolve(const MetricSet& m,
                                  const AttributeSchema& schema);

// The composite score: sum of mu_i * f_i(node[i], requirement[i]).
double Tensor(std::span<const ResolvedTerm> terms, const ResourceNode& node,
              const TaskEdge& edge);
double Tensor(const AttributeSchema& schema, const ResourceNode& node,
              const TaskEdge& edge, const MetricSet& m);

// Triangle-inequality envelope: max over `selected` of sum mu_i * |f_i|.
// Throws Error(kUsage) on an empty selection.
double BoundM(const AttributeSchema& schema, const TaskEdge& edge,
              std::span<const ResourceNode* const> selected,
              const MetricSet& m);

}  // namespace hyperank

#endif  // HYPERANK_METRIC_SET_HPP_
