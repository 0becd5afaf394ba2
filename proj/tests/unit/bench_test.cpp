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

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperank/error.hpp"
#include "hyperank/experiment.hpp"
#include "hyperank/generator.hpp"
#include "hyperank/instance_io.hpp"
#include "hyperank/rng.hpp"

namespace hyperank {
namespace {

std::size_t ColumnIndex(const ResultTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

RunConfig Small() {
  RunConfig cfg;
  cfg.sizes = {30, 60};
  cfg.trials = 3;
  cfg.allocators = {"hypergraph", "cheapest", "random", "greedy"};
  return cfg;
}

TEST_CASE("generation is deterministic") {
  const GeneratorSpec spec = GeneratorSpec::AllocationDefaults();
  CHECK(Generate(spec, 50, 9) == Generate(spec, 50, 9));
  CHECK(!(Generate(spec, 50, 9) == Generate(spec, 50, 10)));
  const Hypergraph one = Generate(spec, 1, 9);
  CHECK(one.nodes.size() == 1);
  CHECK(Validate(one).empty());
  // Node i's values do not depend on how many nodes were drawn.
  CHECK(Generate(spec, 10, 4).nodes[3] == Generate(spec, 40, 4).nodes[3]);
}

TEST_CASE("generated instances respect the distributions") {
  const GeneratorSpec spec = GeneratorSpec::AllocationDefaults();
  const Hypergraph h = Generate(spec, 100000, 17);
  CHECK(Validate(h).empty());
  double sum = 0.0;
  for (const ResourceNode& n : h.nodes) {
    for (std::size_t j = 0; j < spec.attributes.size(); ++j) {
      const Distribution& d = spec.attributes[j].distribution;
      CHECK(n.metadata[j] >= d.min);
      CHECK(n.metadata[j] <= d.max);
    }
    CHECK(n.weight == n.metadata.back());
    sum += n.metadata[0];
  }
  // cpu ~ U[4, 64]: mean 34, standard deviation 60 / sqrt(12).
  const double mean = sum / h.nodes.size();
  const double se = 60.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(h.nodes.size()));
  CHECK(std::abs(mean - 34.0) <= 3 * se);
  CHECK(h.edges.size() == 1);
  CHECK(h.edges[0].requirement == MetadataVector{16, 32, 2.0, 500, 10, 0});
  CHECK(h.edges[0].k == 5);
}

TEST_CASE("discrete choices and generator validation") {
  Distribution d;
  d.choices = {1, 2, 4};
  CHECK(d.Sample(0.0) == 1);
  CHECK(d.Sample(0.5) == 2);
  CHECK(d.Sample(0.999) == 4);

  GeneratorSpec bad = GeneratorSpec::AllocationDefaults();
  bad.attributes[0].distribution = {10, 5, {}};
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = GeneratorSpec::AllocationDefaults();
  bad.attributes[4].distribution = {0, 5, {}};
  CHECK_THROWS_AS(bad.Validate(), Error);
  CHECK_THROWS_AS(Generate(bad, 5, 1), Error);
}

TEST_CASE("generator overrides from json") {
  const nlohmann::json doc = nlohmann::json::parse(R"({
    "attributes": [
      {"name": "cpu", "unit": "cores", "min": 8, "max": 9},
      {"name": "ram", "unit": "GiB", "choices": [64]},
      {"name": "cost", "unit": "units", "kind": "cost", "min": 1, "max": 2}],
    "requirement": [1, 1, 0], "k": 2})");
  const GeneratorSpec spec =
      GeneratorSpecFromJson(doc, GeneratorSpec::AllocationDefaults());
  const Hypergraph h = Generate(spec, 20, 3);
  for (const ResourceNode& n : h.nodes) {
    CHECK(n.metadata[0] >= 8);
    CHECK(n.metadata[0] <= 9);
    CHECK(n.metadata[1] == 64);
  }
  CHECK(h.edges[0].k == 2);
}

TEST_CASE("allocation rows per size, trial and allocator") {
  RunConfig cfg = Small();
  const ResultTable t = RunAllocationExperiment(cfg);
  CHECK(t.rows.size() == 2 * 3 * 4);
  const std::size_t status = ColumnIndex(t, "status");
  const std::size_t ratio = ColumnIndex(t, "ratio_vs_cheapest");
  const std::size_t alloc = ColumnIndex(t, "allocator");
  for (const auto& row : t.rows) {
    const std::string& name = std::get<std::string>(row[alloc]);
    if (std::get<std::string>(row[status]) != "ok") continue;
    if (name == "greedy") continue;  // ignores feasibility
    if (const double* r = std::get_if<double>(&row[ratio])) CHECK(*r >= 1.0);
  }

  cfg.sizes = {100};
  cfg.trials = 1;
  cfg.allocators = {"cheapest"};
  CHECK(RunAllocationExperiment(cfg).rows.size() == 1);

  cfg.sizes = {100, 200, 500, 1000, 2000, 5000};
  cfg.allocators = {"hypergraph", "random"};
  CHECK(RunAllocationExperiment(cfg).rows.size() == 12);
}

TEST_CASE("exhaustive is reported as too large beyond its limit") {
  RunConfig cfg;
  cfg.sizes = {40};
  cfg.allocators = {"exhaustive"};
  const ResultTable t = RunAllocationExperiment(cfg);
  CHECK(std::get<std::string>(t.rows[0][ColumnIndex(t, "status")]) == "too-large");
}

TEST_CASE("scheduling rows") {
  RunConfig cfg;
  cfg.sizes = {100, 200, 300, 400, 500};
  cfg.trials = 2;
  const ResultTable t = RunSchedulingExperiment(cfg);
  CHECK(t.rows.size() == 5 * 2 * 4);
  CHECK(std::get<std::int64_t>(t.rows[0][ColumnIndex(t, "tasks")]) == 3);
}

TEST_CASE("a single VM leaves no choice") {
  RunConfig cfg;
  cfg.sizes = {1};
  cfg.trials = 4;
  cfg.schedulers = {"hypergraph", "rr"};
  const ResultTable t = RunSchedulingExperiment(cfg);
  const std::size_t cost = ColumnIndex(t, "total_cost");
  for (std::size_t i = 0; i < t.rows.size(); i += 2) {
    CHECK(std::get<double>(t.rows[i][cost]) == std::get<double>(t.rows[i + 1][cost]));
  }
}

TEST_CASE("emission formats") {
  ResultTable empty;
  empty.columns = {"a", "b"};
  CHECK(Emit(empty, Format::kCsv) == "a,b\n");
  CHECK(Emit(empty, Format::kJson) == "[]\n");

  ResultTable one = empty;
  one.rows = {{Cell(std::int64_t{3}), Cell(0.1)}};
  CHECK(Emit(one, Format::kCsv) == "a,b\n3,0.1\n");
  one.rows = {{Cell(std::string("x,\"y\"")), Cell(std::monostate{})}};
  CHECK(Emit(one, Format::kCsv) == "a,b\n\"x,\"\"y\"\"\",\n");
  const nlohmann::json parsed = nlohmann::json::parse(Emit(one, Format::kJson));
  CHECK(parsed[0]["a"] == "x,\"y\"");
  CHECK(parsed[0]["b"].is_null());

  const ResultTable dropped = DropColumn(one, "a");
  CHECK(dropped.columns == std::vector<std::string>{"b"});
  CHECK(dropped.rows[0].size() == 1);
}

TEST_CASE("output is identical across thread counts") {
  RunConfig cfg = Small();
  cfg.allocators = {"hypergraph", "exhaustive", "cheapest", "random", "greedy"};
  cfg.threads = 1;
  const std::string one =
      Emit(DropColumn(RunAllocationExperiment(cfg), "wall_time_ns"), Format::kCsv);
  const std::string sched_one =
      Emit(DropColumn(RunSchedulingExperiment(cfg), "wall_time_ns"), Format::kJson);
  for (std::size_t threads : {2, 3, 7}) {
    cfg.threads = threads;
    CHECK(Emit(DropColumn(RunAllocationExperiment(cfg), "wall_time_ns"), Format::kCsv) == one);
    CHECK(Emit(DropColumn(RunSchedulingExperiment(cfg), "wall_time_ns"), Format::kJson) ==
          sched_one);
  }
}

TEST_CASE("run config parsing and validation") {
  const RunConfig cfg = RunConfigFromJson(nlohmann::json::parse(
      R"({"seed": 5, "sizes": [10], "trials": 2, "k": 3, "allocators": ["greedy"]})"));
  CHECK(cfg.seed == 5);
  CHECK(cfg.sizes == std::vector<std::size_t>{10});
  CHECK(cfg.k == 3);
  for (const char* bad : {R"({"sizes": []})", R"({"trials": 0})", R"({"k": 0})",
                          R"({"allocators": ["ilp"]})", R"({"sizes": "x"})",
                          R"({"metrics": [{"attribute":"gpu","function":"log-ratio","mu":1}]})"}) {
    CAPTURE(bad);
    try {
      RunConfigFromJson(nlohmann::json::parse(bad));
      FAIL("expected a configuration error");
    } catch (const Error& e) {
      CHECK(ExitCode(e.kind()) == 1);
    }
  }
}

TEST_CASE("trial seeds are distinct streams") {
  CHECK(TrialSeed(42, 100, 0) != TrialSeed(42, 100, 1));
  CHECK(TrialSeed(42, 100, 0) != TrialSeed(42, 200, 0));
  CHECK(TrialSeed(42, 100, 0) == TrialSeed(42, 100, 0));
  SplitMix64 a(1), b(1);
  for (int i = 0; i < 10; ++i) CHECK(a.Next() == b.Next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.NextUnit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(a.NextBelow(7) < 7);
  }
}

}  // namespace
}  // namespace hyperank
