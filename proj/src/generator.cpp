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

#include "hyperank/generator.hpp"

#include <cmath>

#include "hyperank/error.hpp"
#include "hyperank/rng.hpp"

namespace hyperank {
namespace {

AttributeSpec Uniform(std::string name, std::string unit, AttributeKind kind,
                      double min, double max) {
  return {{std::move(name), std::move(unit), kind}, {min, max, {}}};
}

}  // namespace

double Distribution::Sample(double unit) const {
  if (!choices.empty()) {
    const auto i = static_cast<std::size_t>(unit * static_cast<double>(choices.size()));
    return choices[std::min(i, choices.size() - 1)];
  }
  return min + (max - min) * unit;
}

GeneratorSpec GeneratorSpec::AllocationDefaults() {
  GeneratorSpec spec;
  spec.attributes = {
      Uniform("cpu", "cores", AttributeKind::kCapacity, 4, 64),
      Uniform("ram", "GiB", AttributeKind::kCapacity, 8, 128),
      Uniform("storage", "TB", AttributeKind::kCapacity, 0.5, 8),
      Uniform("bandwidth", "Mbps", AttributeKind::kCapacity, 100, 1000),
      Uniform("latency", "ms", AttributeKind::kLatencyLike, 2, 30),
      Uniform("cost", "units", AttributeKind::kCost, 50, 400),
  };
  spec.requirement = {16, 32, 2.0, 500, 10, 0};
  spec.k = 5;
  return spec;
}

GeneratorSpec GeneratorSpec::SchedulingDefaults() {
  GeneratorSpec spec;
  spec.attributes = {
      Uniform("cpu", "cores", AttributeKind::kCapacity, 2, 64),
      Uniform("ram", "GiB", AttributeKind::kCapacity, 4, 256),
      Uniform("exec_time", "s", AttributeKind::kLatencyLike, 1, 12),
      Uniform("cost", "units", AttributeKind::kCost, 50, 400),
  };
  spec.requirement = {8, 16, 5, 0};
  spec.k = 1;
  return spec;
}

AttributeSchema GeneratorSpec::Schema() const {
  AttributeSchema schema;
  for (const AttributeSpec& a : attributes) schema.attributes.push_back(a.attribute);
  return schema;
}

void GeneratorSpec::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kConfiguration, "generator: " + what);
  };
  if (attributes.empty()) fail("no attributes");
  for (const AttributeSpec& a : attributes) {
    const Distribution& d = a.distribution;
    const bool latency = a.attribute.kind == AttributeKind::kLatencyLike;
    if (!d.choices.empty()) {
      for (double c : d.choices) {
        if (!std::isfinite(c) || (latency ? !(c > 0) : c < 0)) {
          fail("attribute '" + a.attribute.name + "' has an invalid choice value");
        }
      }
      continue;
    }
    if (!std::isfinite(d.min) || !std::isfinite(d.max) || !(d.min < d.max)) {
      fail("attribute '" + a.attribute.name + "' needs finite min < max");
    }
    if (latency && !(d.min > 0)) {
      fail("latency-like attribute '" + a.attribute.name + "' needs min > 0");
    }
    if (!latency && d.min < 0) {
      fail("attribute '" + a.attribute.name + "' needs min >= 0");
    }
  }
  if (requirement.size() != attributes.size()) {
    fail("requirement has " + std::to_string(requirement.size()) +
         " values for " + std::to_string(attributes.size()) + " attributes");
  }
  if (k < 1) fail("k must be >= 1");
  const AttributeSchema schema = Schema();
  Hypergraph probe{schema, {}, {}};
  probe.edges.push_back({"query", requirement, k, std::nullopt});
  if (ValidationReport report = hyperank::Validate(probe); !report.empty()) {
    fail(report.front().path + ": " + report.front().message);
  }
}

GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& value,
                                    GeneratorSpec base) {
  if (!value.is_object()) {
    throw Error(ErrorKind::kConfiguration, "generator block must be an object");
  }
  if (auto attrs = value.find("attributes"); attrs != value.end()) {
    if (!attrs->is_array()) {
      throw Error(ErrorKind::kConfiguration, "generator.attributes must be an array");
    }
    base.attributes.clear();
    for (const auto& item : *attrs) {
      AttributeSpec a;
      a.attribute.name = item.value("name", "");
      a.attribute.unit = item.value("unit", "");
      const auto kind = ParseAttributeKind(item.value("kind", "capacity"));
      if (!kind) {
        throw Error(ErrorKind::kConfiguration,
                    "generator attribute '" + a.attribute.name + "' has an unknown kind");
      }
      a.attribute.kind = *kind;
      if (item.contains("choices")) {
        a.distribution.choices = item["choices"].get<std::vector<double>>();
      } else {
        a.distribution.min = item.value("min", 0.0);
        a.distribution.max = item.value("max", 1.0);
      }
      base.attributes.push_back(std::move(a));
    }
  }
  if (value.contains("requirement")) {
    base.requirement = value["requirement"].get<std::vector<double>>();
  }
  if (value.contains("k")) base.k = value["k"].get<int>();
  base.Validate();
  return base;
}

Hypergraph Generate(const GeneratorSpec& spec, std::size_t n,
                    std::uint64_t seed) {
  spec.Validate();
  if (n < 1) throw Error(ErrorKind::kConfiguration, "generator: n must be >= 1");
  Hypergraph h;
  h.schema = spec.Schema();
  const std::optional<std::size_t> cost = h.schema.CostIndex();
  h.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ResourceNode& node = h.nodes[i];
    node.id = "n" + std::to_string(i + 1);
    node.metadata.resize(spec.attributes.size());
    for (std::size_t j = 0; j < spec.attributes.size(); ++j) {
      node.metadata[j] =
          spec.attributes[j].distribution.Sample(ToUnit(Mix(seed, i, j)));
    }
    node.weight = cost ? node.metadata[*cost] : 1.0;
  }
  h.edges.push_back({"query", spec.requirement, spec.k, std::nullopt});
  return h;
}

}  // namespace hyperank
