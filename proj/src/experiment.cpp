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

#include "hyperank/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "hyperank/baselines.hpp"
#include "hyperank/error.hpp"
#include "hyperank/parallel.hpp"
#include "hyperank/rank.hpp"
#include "hyperank/rng.hpp"
#include "hyperank/scheduler.hpp"

namespace hyperank {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kRandomStream = 0x72616e64;  // "rand"
constexpr std::uint64_t kTaskStream = 0x7461736b;    // "task"

std::int64_t ElapsedNs(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
      .count();
}

std::string StatusOf(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kUsage: return "too-large";
    default: return "error:" + std::string(ToString(e.kind()));
  }
}

Cell OptionalCell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CellText(const Cell& cell, Format format) {
  struct Visitor {
    Format format;
    std::string operator()(std::monostate) const {
      return format == Format::kJson ? "null" : "";
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      if (!std::isfinite(v)) return format == Format::kJson ? "null" : "";
      return FormatDouble(v);
    }
    std::string operator()(const std::string& s) const {
      if (format == Format::kCsv) return CsvField(s);
      return nlohmann::json(s).dump();
    }
  };
  return std::visit(Visitor{format}, cell);
}

void RequireKnown(const std::vector<std::string>& names,
                  std::span<const std::string_view> known, const char* what) {
  for (const std::string& name : names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorKind::kConfiguration,
                  std::string("unknown ") + what + " '" + name + "'");
    }
  }
}

// Runs one job per (size, trial) and concatenates their rows in job order.
template <typename Job>
std::vector<std::vector<Cell>> RunJobs(const RunConfig& cfg, Job job) {
  const std::size_t jobs = cfg.sizes.size() * cfg.trials;
  std::vector<std::vector<std::vector<Cell>>> slots(jobs);
  ParallelFor(jobs, ResolveThreads(cfg.threads), 1,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t j = begin; j < end; ++j) {
                  slots[j] = job(cfg.sizes[j / cfg.trials], j % cfg.trials);
                }
              });
  std::vector<std::vector<Cell>> rows;
  for (auto& slot : slots) {
    for (auto& row : slot) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::uint64_t TrialSeed(std::uint64_t master, std::size_t size,
                        std::size_t trial) {
  return Mix(master, size, trial);
}

void RunConfig::Validate() const {
  if (sizes.empty()) throw Error(ErrorKind::kConfiguration, "sizes must be non-empty");
  for (std::size_t n : sizes) {
    if (n < 1) throw Error(ErrorKind::kConfiguration, "sizes must be >= 1");
  }
  if (trials < 1) throw Error(ErrorKind::kConfiguration, "trials must be >= 1");
  if (k < 1) throw Error(ErrorKind::kConfiguration, "k must be >= 1");
  RequireKnown(allocators, kAllocators, "allocator");
  RequireKnown(schedulers, kSchedulers, "scheduler");
  generator.Validate();
  vm_generator.Validate();
  Resolve(metrics, generator.Schema());
  Resolve(scheduling_metrics, vm_generator.Schema());
}

RunConfig RunConfigFromJson(const nlohmann::json& value, RunConfig cfg) {
  if (!value.is_object()) {
    throw Error(ErrorKind::kConfiguration, "run config must be a JSON object");
  }
  try {
    if (value.contains("seed")) cfg.seed = value["seed"].get<std::uint64_t>();
    if (value.contains("sizes")) cfg.sizes = value["sizes"].get<std::vector<std::size_t>>();
    if (value.contains("trials")) cfg.trials = value["trials"].get<std::size_t>();
    if (value.contains("k")) cfg.k = value["k"].get<int>();
    if (value.contains("metrics")) cfg.metrics = MetricSetFromJson(value["metrics"]);
    if (value.contains("scheduling_metrics")) {
      cfg.scheduling_metrics = MetricSetFromJson(value["scheduling_metrics"]);
    }
    if (value.contains("allocators")) {
      cfg.allocators = value["allocators"].get<std::vector<std::string>>();
    }
    if (value.contains("schedulers")) {
      cfg.schedulers = value["schedulers"].get<std::vector<std::string>>();
    }
    if (value.contains("generator")) {
      cfg.generator = GeneratorSpecFromJson(value["generator"], cfg.generator);
    }
    if (value.contains("vm_generator")) {
      cfg.vm_generator = GeneratorSpecFromJson(value["vm_generator"], cfg.vm_generator);
    }
    if (value.contains("generated_tasks")) {
      cfg.generated_tasks = value["generated_tasks"].get<std::size_t>();
    }
    if (value.contains("exclusive")) cfg.exclusive = value["exclusive"].get<bool>();
    if (value.contains("threads")) cfg.threads = value["threads"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfiguration, std::string("run config: ") + e.what());
  }
  cfg.Validate();
  return cfg;
}

ResultTable RunAllocationExperiment(const RunConfig& cfg) {
  cfg.Validate();
  ResultTable table;
  table.columns = {"size", "trial", "allocator", "status", "selected",
                   "total_cost", "ratio_vs_cheapest", "alpha_bound", "wall_time_ns"};

  table.rows = RunJobs(cfg, [&](std::size_t size, std::size_t trial) {
    const std::uint64_t seed = TrialSeed(cfg.seed, size, trial);
    GeneratorSpec spec = cfg.generator;
    spec.k = cfg.k;
    const Hypergraph h = Generate(spec, size, seed);
    const TaskEdge& edge = h.edges.front();

    std::optional<double> cheapest;
    try {
      cheapest = OptimalCheapestFeasible(h, edge, cfg.k).total_cost;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
    }

    std::vector<std::vector<Cell>> rows;
    for (const std::string& name : cfg.allocators) {
      std::string status = "ok";
      // NaN marks a missing cost.
      double cost = std::numeric_limits<double>::quiet_NaN();
      std::optional<double> alpha;
      std::int64_t selected = 0;
      std::int64_t elapsed = 0;
      try {
        const auto start = Clock::now();
        if (name == "hypergraph") {
          AllocateOptions options;
          options.feasible_only = true;
          options.scoring.threads = 1;
          const RankResult r = AllocateEdge(h, edge, cfg.metrics, options);
          elapsed = ElapsedNs(start);
          cost = r.total_cost;
          alpha = r.bound.alpha_bound;
          selected = static_cast<std::int64_t>(r.selected.size());
          if (r.short_selection) status = "short";
        } else {
          Allocation a;
          if (name == "exhaustive") {
            a = OptimalExhaustive(h, edge, cfg.k);
          } else if (name == "cheapest") {
            a = OptimalCheapestFeasible(h, edge, cfg.k);
          } else if (name == "random") {
            a = RandomAllocation(h, edge, cfg.k, Mix(seed, kRandomStream));
          } else {
            a = GreedyByWeight(h, edge, cfg.k);
          }
          elapsed = ElapsedNs(start);
          cost = a.total_cost;
          selected = static_cast<std::int64_t>(a.selected.size());
          if (a.short_selection) status = "short";
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kInfeasible && e.kind() != ErrorKind::kUsage) throw;
        status = StatusOf(e);
        cost = std::numeric_limits<double>::quiet_NaN();
      }
      std::optional<double> ratio;
      if (status == "ok" && !std::isnan(cost) && cheapest && *cheapest > 0) {
        ratio = cost / *cheapest;
      }
      rows.push_back({static_cast<std::int64_t>(size),
                      static_cast<std::int64_t>(trial), name, status, selected,
                      std::isnan(cost) ? Cell() : Cell(cost), OptionalCell(ratio),
                      OptionalCell(alpha), elapsed});
    }
    return rows;
  });
  return table;
}

ResultTable RunSchedulingExperiment(const RunConfig& cfg) {
  cfg.Validate();
  ResultTable table;
  table.columns = {"size", "trial", "scheduler", "status", "tasks",
                   "total_cost", "wall_time_ns"};

  table.rows = RunJobs(cfg, [&](std::size_t size, std::size_t trial) {
    const std::uint64_t seed = TrialSeed(cfg.seed, size, trial);
    const Hypergraph vms = Generate(cfg.vm_generator, size, seed);

    std::vector<SchedTask> tasks = ReferenceWorkload();
    for (std::size_t t = 0; t < cfg.generated_tasks; ++t) {
      const std::uint64_t key = Mix(seed, kTaskStream, t);
      SchedTask task;
      task.id = "gen" + std::to_string(t + 1);
      task.cpu_cores = 1 + 31 * ToUnit(Mix(key, 0));
      task.ram_gib = 1 + 63 * ToUnit(Mix(key, 1));
      task.exec_seconds = 1 + 19 * ToUnit(Mix(key, 2));
      task.arrival_index = tasks.size();
      tasks.push_back(std::move(task));
    }

    ScheduleOptions options;
    options.exclusive = cfg.exclusive;
    std::vector<std::vector<Cell>> rows;
    for (const std::string& name : cfg.schedulers) {
      std::string status = "ok";
      std::optional<double> cost;
      std::int64_t elapsed = 0;
      try {
        const auto start = Clock::now();
        ScheduleResult r;
        if (name == "hypergraph") {
          r = ScheduleHypergraph(tasks, vms, cfg.scheduling_metrics, options);
        } else if (name == "rr") {
          r = ScheduleRoundRobin(tasks, vms);
        } else if (name == "fcfs") {
          r = ScheduleFcfs(tasks, vms, options);
        } else {
          r = ScheduleSjf(tasks, vms, options);
        }
        elapsed = ElapsedNs(start);
        cost = r.total_cost;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kInfeasible) throw;
        status = StatusOf(e);
      }
      rows.push_back({static_cast<std::int64_t>(size),
                      static_cast<std::int64_t>(trial), name, status,
                      static_cast<std::int64_t>(tasks.size()),
                      OptionalCell(cost), elapsed});
    }
    return rows;
  });
  return table;
}

std::string Emit(const ResultTable& table, Format format) {
  std::string out;
  if (format == Format::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += CsvField(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += CellText(row[c], format);
      }
      out += '\n';
    }
    return out;
  }
  if (table.rows.empty()) return "[]\n";
  out = "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += "  {";
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += nlohmann::json(table.columns[c]).dump() + ": " + CellText(row[c], format);
    }
    out += r + 1 < table.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

ResultTable DropColumn(const ResultTable& table, std::string_view column) {
  const auto it = std::find(table.columns.begin(), table.columns.end(), column);
  if (it == table.columns.end()) return table;
  const std::size_t drop = static_cast<std::size_t>(it - table.columns.begin());
  ResultTable out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != drop) out.columns.push_back(table.columns[c]);
  }
  for (const auto& row : table.rows) {
    std::vector<Cell> copy;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != drop) copy.push_back(row[c]);
    }
    out.rows.push_back(std::move(copy));
  }
  return out;
}

}  // namespace hyperank
