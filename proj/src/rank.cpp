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

#include "hyperank/rank.hpp"

#include <algorithm>

#include "hyperank/baselines.hpp"
#include "hyperank/error.hpp"
#include "hyperank/parallel.hpp"

namespace hyperank {
namespace {

constexpr std::size_t kMinChunk = 1024;

void RequireAligned(const Hypergraph& h, const TaskEdge& edge) {
  if (edge.requirement.size() != h.schema.size()) {
    throw Error(ErrorKind::kConfiguration,
                "edge '" + edge.id + "' requirement has " +
                    std::to_string(edge.requirement.size()) +
                    " values, schema has " + std::to_string(h.schema.size()));
  }
}

}  // namespace

std::string_view ToString(ScoreKey key) {
  return key == ScoreKey::kTensor ? "tensor" : "upsilon";
}

std::optional<ScoreKey> ParseScoreKey(std::string_view text) {
  if (text == "upsilon") return ScoreKey::kUpsilon;
  if (text == "tensor") return ScoreKey::kTensor;
  return std::nullopt;
}

std::vector<RelevanceScore> ScoreCandidates(
    const Hypergraph& h, const TaskEdge& edge, const MetricSet& m,
    ScoreKey key, std::span<const std::size_t> candidates,
    const ScoreOptions& options) {
  RequireAligned(h, edge);
  const std::vector<ResolvedTerm> terms = Resolve(m, h.schema);
  const std::size_t n = candidates.size();

  // Structure-of-arrays gather, with the domain check done up front so a
  // failure is reported identically at every concurrency level.
  std::vector<std::vector<double>> columns(terms.size(), std::vector<double>(n));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const double need = edge.requirement[terms[t].index];
    for (std::size_t c = 0; c < n; ++c) {
      const ResourceNode& node = h.nodes[candidates[c]];
      if (node.metadata.size() != h.schema.size()) {
        throw Error(ErrorKind::kConfiguration,
                    "node '" + node.id + "' metadata is not aligned to the schema");
      }
      const double have = node.metadata[terms[t].index];
      if (!InDomain(terms[t].function, have, need)) {
        try {
          RequireDomain(terms[t].function, have, need);
        } catch (const Error& e) {
          throw Error(ErrorKind::kDomain, "node '" + node.id + "', attribute '" +
                                              h.schema.attributes[terms[t].index].name +
                                              "': " + e.what());
        }
      }
      columns[t][c] = have;
    }
  }

  std::vector<double> tensor(n, 0.0);
  ParallelFor(n, ResolveThreads(options.threads), kMinChunk,
              [&](std::size_t begin, std::size_t end) {
                std::span<double> acc(tensor.data() + begin, end - begin);
                for (std::size_t t = 0; t < terms.size(); ++t) {
                  kernels::AccumulateColumn(
                      options.isa, terms[t].function, terms[t].mu,
                      edge.requirement[terms[t].index],
                      std::span<const double>(columns[t].data() + begin,
                                              end - begin),
                      acc);
                }
              });

  std::vector<RelevanceScore> scores;
  scores.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const ResourceNode& node = h.nodes[candidates[c]];
    RelevanceScore s;
    s.node_id = node.id;
    s.edge_id = edge.id;
    s.tensor = tensor[c];
    s.weight = node.weight;
    s.zero_weight = node.weight <= 0.0;
    s.upsilon = tensor[c] / std::max(node.weight, kWeightEpsilon);
    s.key = key == ScoreKey::kTensor ? s.tensor : s.upsilon;
    scores.push_back(std::move(s));
  }
  return scores;
}

std::vector<RelevanceScore> ScoreAll(const Hypergraph& h, const TaskEdge& edge,
                                     const MetricSet& m, ScoreKey key,
                                     const ScoreOptions& options) {
  const std::vector<std::size_t> candidates = CandidateIndices(h, edge);
  return ScoreCandidates(h, edge, m, key, candidates, options);
}

bool RanksBefore(const RelevanceScore& a, const RelevanceScore& b) {
  if (a.key != b.key) return a.key > b.key;
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.node_id != b.node_id) return a.node_id < b.node_id;
  return a.edge_id < b.edge_id;
}

RankResult Rank(std::vector<RelevanceScore> scores, int k,
                std::size_t* comparisons) {
  if (k < 1) {
    throw Error(ErrorKind::kUsage, "k must be >= 1, got " + std::to_string(k));
  }
  std::size_t calls = 0;
  std::stable_sort(scores.begin(), scores.end(),
                   [&calls](const RelevanceScore& a, const RelevanceScore& b) {
                     ++calls;
                     return RanksBefore(a, b);
                   });
  if (comparisons) *comparisons = calls;

  RankResult result;
  if (!scores.empty()) result.edge_id = scores.front().edge_id;
  const std::size_t take = std::min<std::size_t>(k, scores.size());
  result.short_selection = take < static_cast<std::size_t>(k);

  std::vector<const RelevanceScore*> picked;
  for (std::size_t i = 0; i < take; ++i) {
    result.selected.push_back(scores[i].node_id);
    result.zero_weight_selected |= scores[i].zero_weight;
    picked.push_back(&scores[i]);
  }
  // Canonical summation order (weight asc, id asc), shared with baselines.
  std::sort(picked.begin(), picked.end(),
            [](const RelevanceScore* a, const RelevanceScore* b) {
              if (a->weight != b->weight) return a->weight < b->weight;
              return a->node_id < b->node_id;
            });
  for (const RelevanceScore* s : picked) result.total_cost += s->weight;

  result.bound.k = k;
  result.ranked = std::move(scores);
  return result;
}

RankResult AllocateEdge(const Hypergraph& h, const TaskEdge& edge,
                        const MetricSet& m, const AllocateOptions& options) {
  std::vector<std::size_t> candidates = CandidateIndices(h, edge);
  if (options.feasible_only) {
    const FeasibilityRule rule(h.schema);
    std::erase_if(candidates, [&](std::size_t i) {
      return !rule.Feasible(h.nodes[i], edge);
    });
  }
  RankResult result = Rank(
      ScoreCandidates(h, edge, m, options.key, candidates, options.scoring),
      edge.k);
  result.edge_id = edge.id;
  result.key = options.key;

  if (!result.selected.empty()) {
    const auto index = h.NodeIndex();
    std::vector<const ResourceNode*> chosen;
    for (const std::string& id : result.selected) {
      chosen.push_back(&h.nodes[index.at(id)]);
    }
    result.bound.m = BoundM(h.schema, edge, chosen, m);
    double min_upsilon = result.ranked.front().upsilon;
    for (std::size_t i = 0; i < result.selected.size(); ++i) {
      min_upsilon = std::min(min_upsilon, result.ranked[i].upsilon);
    }
    result.bound.min_selected_upsilon = min_upsilon;
  }
  try {
    const Allocation optimum = OptimalCheapestFeasible(h, edge, edge.k);
    result.bound.optimal_cost = optimum.total_cost;
    result.bound.alpha_bound = edge.k * result.bound.m * optimum.total_cost;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
  }
  return result;
}

std::vector<RankResult> Allocate(const Hypergraph& h, const MetricSet& m,
                                 const AllocateOptions& options) {
  std::vector<RankResult> results;
  results.reserve(h.edges.size());
  for (const TaskEdge& edge : h.edges) {
    results.push_back(AllocateEdge(h, edge, m, options));
  }
  return results;
}

ApproximationReport MakeApproximationReport(const RankResult& result,
                                            double optimal_cost,
                                            double m_bound) {
  if (!(optimal_cost > 0.0)) {
    throw Error(ErrorKind::kDegenerate,
                "optimal cost must be > 0 for an approximation ratio (edge '" +
                    result.edge_id + "')");
  }
  ApproximationReport report;
  report.ratio = result.total_cost / optimal_cost;
  report.alpha_bound = result.bound.k * m_bound * optimal_cost;
  report.within_bound = report.ratio <= report.alpha_bound;
  return report;
}

nlohmann::json ToJson(const RankResult& result, bool verbose) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json out = {
      {"edge_id", result.edge_id},
      {"key", std::string(ToString(result.key))},
      {"selected", result.selected},
      {"total_cost", result.total_cost},
      {"short_selection", result.short_selection},
      {"zero_weight_selected", result.zero_weight_selected},
      {"bound",
       {{"M", result.bound.m},
        {"k", result.bound.k},
        {"alpha_bound", opt(result.bound.alpha_bound)},
        {"optimal_cost", opt(result.bound.optimal_cost)},
        {"min_selected_upsilon", opt(result.bound.min_selected_upsilon)}}},
  };
  if (verbose) {
    json ranked = json::array();
    for (const RelevanceScore& s : result.ranked) {
      ranked.push_back({{"node_id", s.node_id},
                        {"tensor", s.tensor},
                        {"upsilon", s.upsilon},
                        {"weight", s.weight},
                        {"zero_weight", s.zero_weight}});
    }
    out["ranked"] = std::move(ranked);
  }
  return out;
}

}  // namespace hyperank
