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

#include "hyperank/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hyperank/baselines.hpp"
#include "hyperank/error.hpp"
#include "hyperank/instance_io.hpp"
#include "hyperank/rank.hpp"

namespace hyperank {
namespace {

void RequireVms(const Hypergraph& vms) {
  if (vms.nodes.empty()) {
    throw Error(ErrorKind::kUsage, "scheduling needs at least one VM");
  }
}

double SumCost(const std::vector<Assignment>& assignments) {
  double total = 0.0;
  for (const Assignment& a : assignments) total += a.cost;
  return total;
}

ScheduleResult FirstFit(std::vector<SchedTask> ordered, const Hypergraph& vms,
                        const ScheduleOptions& options, std::string name) {
  RequireVms(vms);
  const FeasibilityRule rule(vms.schema);
  std::vector<bool> used(vms.nodes.size(), false);
  ScheduleResult result;
  result.scheduler = std::move(name);
  for (const SchedTask& task : ordered) {
    const TaskEdge edge = TaskToEdge(task, vms.schema);
    std::optional<std::size_t> chosen;
    for (std::size_t v = 0; v < vms.nodes.size(); ++v) {
      ++result.operations;
      if (options.exclusive && used[v]) continue;
      if (rule.Feasible(vms.nodes[v], edge)) {
        chosen = v;
        break;
      }
    }
    if (!chosen) {
      throw Error(ErrorKind::kInfeasible,
                  result.scheduler + ": no feasible VM for task '" + task.id + "'");
    }
    used[*chosen] = true;
    result.assignments.push_back(
        {task.id, vms.nodes[*chosen].id, std::nullopt, vms.nodes[*chosen].weight});
  }
  result.total_cost = SumCost(result.assignments);
  return result;
}

}  // namespace

AttributeSchema SchedulingSchema() {
  return {{{"cpu", "cores", AttributeKind::kCapacity},
           {"ram", "GiB", AttributeKind::kCapacity},
           {"exec_time", "s", AttributeKind::kLatencyLike},
           {"cost", "units", AttributeKind::kCost}}};
}

std::vector<SchedTask> ReferenceWorkload() {
  return {{"task1", 8, 16, 5, 0}, {"task2", 4, 8, 10, 1}, {"task3", 16, 32, 2, 2}};
}

TaskEdge TaskToEdge(const SchedTask& task, const AttributeSchema& schema) {
  TaskEdge edge;
  edge.id = task.id;
  edge.k = 1;
  edge.requirement.reserve(schema.size());
  for (const Attribute& attr : schema.attributes) {
    if (attr.kind == AttributeKind::kCost) {
      edge.requirement.push_back(0.0);
    } else if (attr.name == "cpu") {
      edge.requirement.push_back(task.cpu_cores);
    } else if (attr.name == "ram") {
      edge.requirement.push_back(task.ram_gib);
    } else if (attr.name == "exec_time") {
      edge.requirement.push_back(task.exec_seconds);
    } else {
      throw Error(ErrorKind::kConfiguration,
                  "scheduling schema attribute '" + attr.name +
                      "' has no task counterpart (expected cpu, ram, exec_time, cost)");
    }
  }
  return edge;
}

ScheduleResult ScheduleHypergraph(const std::vector<SchedTask>& tasks,
                                  const Hypergraph& vms, const MetricSet& m,
                                  const ScheduleOptions& options) {
  RequireVms(vms);
  if (options.exclusive && tasks.size() > vms.nodes.size()) {
    throw Error(ErrorKind::kInfeasible,
                "exclusive scheduling of " + std::to_string(tasks.size()) +
                    " tasks needs as many VMs, have " +
                    std::to_string(vms.nodes.size()));
  }
  const FeasibilityRule rule(vms.schema);
  std::vector<std::size_t> pool(vms.nodes.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  ScheduleResult result;
  result.scheduler = "hypergraph";
  for (const SchedTask& task : tasks) {
    const TaskEdge edge = TaskToEdge(task, vms.schema);
    std::vector<std::size_t> candidates = pool;
    if (options.feasible_only) {
      std::erase_if(candidates, [&](std::size_t i) {
        return !rule.Feasible(vms.nodes[i], edge);
      });
    }
    if (candidates.empty()) {
      throw Error(ErrorKind::kInfeasible,
                  "hypergraph: no candidate VM for task '" + task.id + "'");
    }
    std::size_t comparisons = 0;
    RankResult ranked = Rank(
        ScoreCandidates(vms, edge, m, ScoreKey::kUpsilon, candidates), 1,
        &comparisons);
    result.operations += comparisons + candidates.size();
    const RelevanceScore& best = ranked.ranked.front();
    result.assignments.push_back({task.id, best.node_id, best.upsilon, best.weight});
    if (options.exclusive) {
      std::erase_if(pool, [&](std::size_t i) { return vms.nodes[i].id == best.node_id; });
    }
  }
  result.total_cost = SumCost(result.assignments);
  return result;
}

ScheduleResult ScheduleRoundRobin(const std::vector<SchedTask>& tasks,
                                  const Hypergraph& vms) {
  RequireVms(vms);
  ScheduleResult result;
  result.scheduler = "rr";
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const ResourceNode& vm = vms.nodes[i % vms.nodes.size()];
    ++result.operations;
    result.assignments.push_back({tasks[i].id, vm.id, std::nullopt, vm.weight});
  }
  result.total_cost = SumCost(result.assignments);
  return result;
}

ScheduleResult ScheduleFcfs(const std::vector<SchedTask>& tasks,
                            const Hypergraph& vms,
                            const ScheduleOptions& options) {
  std::vector<SchedTask> ordered = tasks;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SchedTask& a, const SchedTask& b) {
                     return a.arrival_index < b.arrival_index;
                   });
  return FirstFit(std::move(ordered), vms, options, "fcfs");
}

ScheduleResult ScheduleSjf(const std::vector<SchedTask>& tasks,
                           const Hypergraph& vms,
                           const ScheduleOptions& options) {
  std::vector<SchedTask> ordered = tasks;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SchedTask& a, const SchedTask& b) {
                     if (a.exec_seconds != b.exec_seconds) {
                       return a.exec_seconds < b.exec_seconds;
                     }
                     return a.arrival_index < b.arrival_index;
                   });
  return FirstFit(std::move(ordered), vms, options, "sjf");
}

std::vector<SchedTask> LoadTasks(std::string_view bytes) {
  const nlohmann::json doc = ParseJson(bytes);
  if (!doc.is_array()) {
    throw Error(ErrorKind::kParse, "task list must be a JSON array");
  }
  std::vector<SchedTask> tasks;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string path = "tasks[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(ErrorKind::kParse, path + ": expected object");
    auto number = [&](const char* key) {
      if (!item.contains(key) || !item[key].is_number()) {
        throw Error(ErrorKind::kParse,
                    path + "." + key + ": expected number");
      }
      const double v = item[key].get<double>();
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw Error(ErrorKind::kValidation, path + "." + key + " must be > 0");
      }
      return v;
    };
    if (!item.contains("id") || !item["id"].is_string()) {
      throw Error(ErrorKind::kParse, path + ".id: expected string");
    }
    SchedTask task;
    task.id = item["id"].get<std::string>();
    task.cpu_cores = number("cpu_cores");
    task.ram_gib = number("ram_gib");
    task.exec_seconds = number("exec_seconds");
    if (item.contains("arrival_index")) {
      if (!item["arrival_index"].is_number_unsigned()) {
        throw Error(ErrorKind::kParse,
                    path + ".arrival_index: expected non-negative integer");
      }
      task.arrival_index = item["arrival_index"].get<std::uint64_t>();
    } else {
      task.arrival_index = i;
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

std::string ScheduleCsv(const std::vector<ScheduleResult>& results) {
  std::string out = "scheduler,task_id,node_id,score,cost\n";
  char buf[64];
  for (const ScheduleResult& r : results) {
    for (const Assignment& a : r.assignments) {
      out += r.scheduler + "," + a.task_id + "," + a.node_id + ",";
      if (a.score) {
        std::snprintf(buf, sizeof(buf), "%.9g", *a.score);
        out += buf;
      }
      std::snprintf(buf, sizeof(buf), ",%.9g\n", a.cost);
      out += buf;
    }
  }
  return out;
}

}  // namespace hyperank
