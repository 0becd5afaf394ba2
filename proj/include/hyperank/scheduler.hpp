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

#ifndef HYPERANK_SCHEDULER_HPP_
#define HYPERANK_SCHEDULER_HPP_

// Task-to-VM scheduling: hypergraph best-fit assignment and the Round Robin,
// FCFS and SJF comparators.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperank/metric_set.hpp"
#include "hyperank/model.hpp"

namespace hyperank {

struct SchedTask {
  std::string id;
  double cpu_cores = 1.0;
  double ram_gib = 1.0;
  double exec_seconds = 1.0;
  std::uint64_t arrival_index = 0;

  bool operator==(const SchedTask&) const = default;
};

struct Assignment {
  std::string task_id;
  std::string node_id;
  std::optional<double> score;  // relevance, for the hypergraph scheduler
  double cost = 0.0;
};

struct ScheduleResult {
  std::string scheduler;
  std::vector<Assignment> assignments;  // in processing order
  double total_cost = 0.0;
  // Comparator calls plus scored candidates (hypergraph), or VM index
  // computations (round robin).
  std::size_t operations = 0;
};

struct ScheduleOptions {
  // An assigned VM leaves the candidate pool for later tasks.
  bool exclusive = false;
  // Hypergraph scheduler only: score feasible VMs only.
  bool feasible_only = false;
};

// cpu (cores), ram (GiB), exec_time (s, latency-like), cost.
AttributeSchema SchedulingSchema();

// The three-task workload: 8 cores/16 GiB/5 s, 4/8/10, 16/32/2.
std::vector<SchedTask> ReferenceWorkload();

// A k = 1 edge whose requirement is aligned to `schema` by attribute name
// (cpu, ram, exec_time; cost-kind attributes get 0). Throws
// Error(kConfiguration) for any other attribute.
TaskEdge TaskToEdge(const SchedTask& task, const AttributeSchema& schema);

ScheduleResult ScheduleHypergraph(const std::vector<SchedTask>& tasks,
                                  const Hypergraph& vms, const MetricSet& m,
                                  const ScheduleOptions& options = {});
ScheduleResult ScheduleRoundRobin(const std::vector<SchedTask>& tasks,
                                  const Hypergraph& vms);
ScheduleResult ScheduleFcfs(const std::vector<SchedTask>& tasks,
                            const Hypergraph& vms,
                            const ScheduleOptions& options = {});
ScheduleResult ScheduleSjf(const std::vector<SchedTask>& tasks,
                           const Hypergraph& vms,
                           const ScheduleOptions& options = {});

// [{"id","cpu_cores","ram_gib","exec_seconds","arrival_index"}]
std::vector<SchedTask> LoadTasks(std::string_view bytes);

// scheduler,task_id,node_id,score,cost
std::string ScheduleCsv(const std::vector<ScheduleResult>& results);

}  // namespace hyperank

#endif  // HYPERANK_SCHEDULER_HPP_
