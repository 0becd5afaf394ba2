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

#ifndef HYPERANK_EXPERIMENT_HPP_
#define HYPERANK_EXPERIMENT_HPP_

// Seeded allocation and scheduling experiments and their tabular output.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperank/generator.hpp"
#include "hyperank/metric_set.hpp"
#include "json.hpp"

namespace hyperank {

inline constexpr std::string_view kAllocators[] = {"hypergraph", "exhaustive",
                                                   "cheapest", "random", "greedy"};
inline constexpr std::string_view kSchedulers[] = {"hypergraph", "rr", "fcfs", "sjf"};

struct RunConfig {
  std::uint64_t seed = 42;
  std::vector<std::size_t> sizes = {100, 200, 500, 1000, 2000, 5000};
  std::size_t trials = 1;
  int k = 5;
  MetricSet metrics = AppendixPreset();
  MetricSet scheduling_metrics = SchedulingPreset();
  std::vector<std::string> allocators = {"hypergraph", "cheapest", "random", "greedy"};
  std::vector<std::string> schedulers = {"hypergraph", "rr", "fcfs", "sjf"};
  GeneratorSpec generator = GeneratorSpec::AllocationDefaults();
  GeneratorSpec vm_generator = GeneratorSpec::SchedulingDefaults();
  // Random tasks appended to the fixed three-task workload.
  std::size_t generated_tasks = 0;
  bool exclusive = false;
  // Trial-level concurrency; 0 defers to HYPERANK_THREADS.
  std::size_t threads = 0;

  // Throws Error(kConfiguration).
  void Validate() const;
};

// Keys: seed, sizes, trials, k, metrics, scheduling_metrics, allocators,
// schedulers, generator, vm_generator, generated_tasks, exclusive, threads.
RunConfig RunConfigFromJson(const nlohmann::json& value, RunConfig base = {});

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Columns: size, trial, allocator, status, selected, total_cost,
// ratio_vs_cheapest, alpha_bound, wall_time_ns. The hypergraph allocator
// ranks by relevance over the feasible candidates, so its cost is comparable
// with the feasible optimum. Rows are ordered by (size, trial, allocator).
ResultTable RunAllocationExperiment(const RunConfig& cfg);

// Columns: size, trial, scheduler, status, tasks, total_cost, wall_time_ns.
ResultTable RunSchedulingExperiment(const RunConfig& cfg);

enum class Format { kCsv, kJson };

// CSV with a header line, or a JSON array of row objects. Doubles use 9
// significant digits; non-finite doubles and empty cells are blank / null.
std::string Emit(const ResultTable& table, Format format);

// Copy without the named column (used to diff runs modulo timings).
ResultTable DropColumn(const ResultTable& table, std::string_view column);

// Seed of trial `trial` at size `size`.
std::uint64_t TrialSeed(std::uint64_t master, std::size_t size, std::size_t trial);

}  // namespace hyperank

#endif  // HYPERANK_EXPERIMENT_HPP_
