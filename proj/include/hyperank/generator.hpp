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

#ifndef HYPERANK_GENERATOR_HPP_
#define HYPERANK_GENERATOR_HPP_

// Seeded instance generation. Every value is drawn from its own counter-based
// stream keyed by (seed, node index, attribute index), so an instance does not
// depend on generation order or on how the work is split.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperank/model.hpp"
#include "json.hpp"

namespace hyperank {

// Uniform on [min, max) unless `choices` is non-empty, in which case one of
// the choices is picked uniformly.
struct Distribution {
  double min = 0.0;
  double max = 1.0;
  std::vector<double> choices;

  double Sample(double unit) const;
};

struct AttributeSpec {
  Attribute attribute;
  Distribution distribution;
};

struct GeneratorSpec {
  std::vector<AttributeSpec> attributes;
  MetadataVector requirement;  // of the generated query edge
  int k = 5;

  // cpu U[4,64] cores, ram U[8,128] GiB, storage U[0.5,8] TB,
  // bandwidth U[100,1000] Mbps, latency U[2,30] ms, cost U[50,400];
  // requirement {16, 32, 2.0, 500, 10, 0}.
  static GeneratorSpec AllocationDefaults();
  // VMs: cpu U[2,64] cores, ram U[4,256] GiB, exec_time U[1,12] s,
  // cost U[50,400]; requirement {8, 16, 5, 0}.
  static GeneratorSpec SchedulingDefaults();

  AttributeSchema Schema() const;
  // Throws Error(kConfiguration).
  void Validate() const;
};

// Fields present in `value` override `base`: {"attributes": [{"name","unit",
// "kind","min","max"|"choices"}], "requirement": [...], "k": n}.
GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& value,
                                    GeneratorSpec base);

// n nodes "n1".."n<n>" and one query edge "query" over all of them.
Hypergraph Generate(const GeneratorSpec& spec, std::size_t n,
                    std::uint64_t seed);

}  // namespace hyperank

#endif  // HYPERANK_GENERATOR_HPP_
