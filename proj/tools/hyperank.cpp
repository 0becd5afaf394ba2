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

// Command-line front end: allocate, schedule, bench, tables, validate.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperank/error.hpp"
#include "hyperank/experiment.hpp"
#include "hyperank/instance_io.hpp"
#include "hyperank/poset.hpp"
#include "hyperank/rank.hpp"
#include "hyperank/scheduler.hpp"
#include "hyperank/table_select.hpp"

namespace {

using hyperank::Error;
using hyperank::ErrorKind;

struct Output {
  std::string path;
  std::string format = "csv";
};

void AddOutput(CLI::App* cmd, Output& out, std::string default_format) {
  out.format = std::move(default_format);
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void Write(const Output& out, const std::string& bytes) {
  if (out.path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
  } else {
    hyperank::WriteFile(out.path, bytes);
  }
}

hyperank::Format FormatOf(const Output& out) {
  return out.format == "json" ? hyperank::Format::kJson : hyperank::Format::kCsv;
}

hyperank::MetricSet LoadMetrics(const std::string& spec) {
  if (spec == "appendix" || spec == "scheduling") return hyperank::Preset(spec);
  return hyperank::MetricSetFromJson(hyperank::ParseJson(hyperank::ReadFile(spec)));
}

std::vector<std::size_t> ParseSizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kConfiguration, "--sizes: bad entry '" + item + "'");
    }
    pos = comma + 1;
  }
  return sizes;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    if (comma > pos) out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string DotForEdges(const hyperank::Hypergraph& h,
                        const hyperank::MetricSet& m, hyperank::ScoreKey key) {
  std::string out;
  hyperank::ScoringContext ctx(h, {{"metrics", m}}, key);
  for (const hyperank::TaskEdge& edge : h.edges) {
    std::vector<hyperank::SemanticEntity> entities;
    for (std::size_t i : hyperank::CandidateIndices(h, edge)) {
      entities.push_back({h.nodes[i].id, edge.id, "metrics"});
    }
    hyperank::DagOptions options;
    options.consecutive_only = entities.size() > 2000;
    out += hyperank::ToDot(hyperank::BuildDag(entities, ctx, options));
  }
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Hypergraph ranking for top-k resource allocation and scheduling"};
  app.require_subcommand(1);

  // allocate
  auto* allocate = app.add_subcommand("allocate", "Rank and select top-k nodes per edge");
  std::string instance_path, metrics_spec = "appendix", key_name = "upsilon", dot_path;
  bool feasible_only = false, verbose = false;
  Output allocate_out;
  allocate->add_option("--instance", instance_path, "Instance JSON")->required();
  allocate->add_option("--metrics", metrics_spec, "Preset name or metric JSON file");
  allocate->add_option("--key", key_name, "Ranking key")
      ->check(CLI::IsMember({"upsilon", "tensor"}));
  allocate->add_flag("--feasible-only", feasible_only,
                     "Rank only nodes meeting the requirement");
  allocate->add_flag("--verbose", verbose, "Include the full ranked list");
  allocate->add_option("--dot", dot_path, "Write the dependency DAG as DOT");
  AddOutput(allocate, allocate_out, "json");

  // schedule
  auto* schedule = app.add_subcommand("schedule", "Assign tasks to VMs");
  std::string tasks_path, vms_path, scheduler = "all", sched_metrics = "scheduling";
  bool exclusive = false, sched_feasible = false;
  Output schedule_out;
  schedule->add_option("--tasks", tasks_path, "Task list JSON")->required();
  schedule->add_option("--vms", vms_path, "VM instance JSON")->required();
  schedule->add_flag("--exclusive", exclusive, "Each VM takes at most one task");
  schedule->add_flag("--feasible-only", sched_feasible,
                     "Hypergraph scheduler scores feasible VMs only");
  schedule->add_option("--scheduler", scheduler)
      ->check(CLI::IsMember({"hypergraph", "rr", "fcfs", "sjf", "all"}));
  schedule->add_option("--metrics", sched_metrics, "Preset name or metric JSON file");
  AddOutput(schedule, schedule_out, "csv");

  // bench
  auto* bench = app.add_subcommand("bench", "Seeded experiments");
  bench->require_subcommand(1);
  struct BenchArgs {
    std::string config, sizes, list;
    std::size_t trials = 0;
    int k = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    Output out;
  } alloc_args, sched_args;
  auto add_bench = [&](const char* name, const char* help, BenchArgs& args,
                       const char* list_flag) {
    auto* cmd = bench->add_subcommand(name, help);
    cmd->add_option("--config", args.config, "Run-config JSON");
    cmd->add_option("--sizes", args.sizes, "Comma-separated node counts");
    cmd->add_option("--trials", args.trials, "Trials per size");
    cmd->add_option("--seed", args.seed, "Master seed");
    cmd->add_option(list_flag, args.list, "Comma-separated list");
    AddOutput(cmd, args.out, "csv");
    return cmd;
  };
  auto* bench_alloc = add_bench("alloc", "Allocation experiment", alloc_args, "--allocators");
  bench_alloc->add_option("--k", alloc_args.k, "Resources per task");
  auto* bench_sched = add_bench("sched", "Scheduling experiment", sched_args, "--schedulers");

  // tables
  auto* tables = app.add_subcommand("tables", "Rank table.column entities for a question");
  std::string schema_path, question;
  std::size_t table_k = 5;
  Output tables_out;
  tables->add_option("--schema", schema_path, "Schema entity JSON")->required();
  tables->add_option("--question", question, "Natural-language question")->required();
  tables->add_option("--k", table_k, "Entities to return");
  tables->add_option("--out", tables_out.path, "Output file (default: stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "Check an instance document");
  std::string validate_path;
  validate->add_option("--instance", validate_path, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*allocate) {
    const hyperank::Hypergraph h = hyperank::LoadInstance(hyperank::ReadFile(instance_path));
    const hyperank::MetricSet m = LoadMetrics(metrics_spec);
    hyperank::AllocateOptions options;
    options.key = *hyperank::ParseScoreKey(key_name);
    options.feasible_only = feasible_only;
    const auto results = hyperank::Allocate(h, m, options);
    std::string bytes;
    if (allocate_out.format == "json") {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : results) doc.push_back(hyperank::ToJson(r, verbose));
      bytes = doc.dump(2) + "\n";
    } else {
      bytes = "edge_id,position,node_id,tensor,upsilon,weight,selected\n";
      for (const auto& r : results) {
        const std::size_t rows = verbose ? r.ranked.size() : r.selected.size();
        for (std::size_t i = 0; i < rows; ++i) {
          const auto& s = r.ranked[i];
          bytes += r.edge_id + "," + std::to_string(i + 1) + "," + s.node_id + "," +
                   FormatDouble(s.tensor) + "," + FormatDouble(s.upsilon) + "," +
                   FormatDouble(s.weight) + "," +
                   (i < r.selected.size() ? "1" : "0") + "\n";
        }
      }
    }
    Write(allocate_out, bytes);
    if (!dot_path.empty()) hyperank::WriteFile(dot_path, DotForEdges(h, m, options.key));
    return 0;
  }

  if (*schedule) {
    const auto tasks = hyperank::LoadTasks(hyperank::ReadFile(tasks_path));
    const hyperank::Hypergraph vms = hyperank::LoadInstance(hyperank::ReadFile(vms_path));
    hyperank::ScheduleOptions options;
    options.exclusive = exclusive;
    options.feasible_only = sched_feasible;
    std::vector<hyperank::ScheduleResult> results;
    const bool all = scheduler == "all";
    if (all || scheduler == "hypergraph") {
      results.push_back(hyperank::ScheduleHypergraph(tasks, vms, LoadMetrics(sched_metrics), options));
    }
    if (all || scheduler == "rr") results.push_back(hyperank::ScheduleRoundRobin(tasks, vms));
    if (all || scheduler == "fcfs") results.push_back(hyperank::ScheduleFcfs(tasks, vms, options));
    if (all || scheduler == "sjf") results.push_back(hyperank::ScheduleSjf(tasks, vms, options));
    if (schedule_out.format == "json") {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : results) {
        nlohmann::json assignments = nlohmann::json::array();
        for (const auto& a : r.assignments) {
          assignments.push_back({{"task_id", a.task_id},
                                 {"node_id", a.node_id},
                                 {"score", a.score ? nlohmann::json(*a.score) : nlohmann::json()},
                                 {"cost", a.cost}});
        }
        doc.push_back({{"scheduler", r.scheduler},
                       {"total_cost", r.total_cost},
                       {"assignments", std::move(assignments)}});
      }
      Write(schedule_out, doc.dump(2) + "\n");
    } else {
      Write(schedule_out, hyperank::ScheduleCsv(results));
    }
    return 0;
  }

  if (*bench) {
    const bool is_alloc = bench_alloc->parsed();
    BenchArgs& args = is_alloc ? alloc_args : sched_args;
    CLI::App* cmd = is_alloc ? bench_alloc : bench_sched;
    hyperank::RunConfig cfg;
    if (!args.config.empty()) {
      cfg = hyperank::RunConfigFromJson(
          hyperank::ParseJson(hyperank::ReadFile(args.config)));
    }
    if (!args.sizes.empty()) cfg.sizes = ParseSizes(args.sizes);
    else if (args.config.empty() && !is_alloc) cfg.sizes = {100, 200, 300, 400, 500};
    if (cmd->count("--trials")) cfg.trials = args.trials;
    if (cmd->count("--seed")) cfg.seed = args.seed;
    if (is_alloc && cmd->count("--k")) cfg.k = args.k;
    if (!args.list.empty()) {
      (is_alloc ? cfg.allocators : cfg.schedulers) = SplitList(args.list);
    }
    const hyperank::ResultTable table = is_alloc
                                            ? hyperank::RunAllocationExperiment(cfg)
                                            : hyperank::RunSchedulingExperiment(cfg);
    Write(args.out, hyperank::Emit(table, FormatOf(args.out)));
    return 0;
  }

  if (*tables) {
    const auto entities = hyperank::LoadSchemaEntities(hyperank::ReadFile(schema_path));
    const auto ranking = hyperank::RankEntities(question, entities, table_k);
    for (const std::string& w : ranking.warnings) std::cerr << "warning: " << w << "\n";
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& e : ranking.top) doc.push_back({{"entity", e.entity}, {"score", e.score}});
    tables_out.format = "json";
    Write(tables_out, doc.dump(2) + "\n");
    return 0;
  }

  if (*validate) {
    try {
      const auto h = hyperank::LoadInstance(hyperank::ReadFile(validate_path));
      std::cout << "valid: " << h.nodes.size() << " nodes, " << h.edges.size()
                << " edges, " << h.schema.size() << " attributes\n";
    } catch (const hyperank::ValidationError& e) {
      for (const auto& v : e.report()) std::cout << v.path << ": " << v.message << "\n";
      return 1;
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const hyperank::Error& e) {
    std::cerr << "error (" << hyperank::ToString(e.kind()) << "): " << e.what() << "\n";
    return hyperank::ExitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
