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

#ifndef HYPERANK_RANK_HPP_
#define HYPERANK_RANK_HPP_

// Hypergraph ranking: relevance scoring of every candidate node against a
// task edge, ranked projection, top-k selection and bound diagnostics.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperank/kernels.hpp"
#include "hyperank/metric_set.hpp"
#include "hyperank/model.hpp"
#include "json.hpp"

namespace hyperank {

// Substituted for a zero weight when dividing.
inline constexpr double kWeightEpsilon = 1e-12;

enum class ScoreKey { kUpsilon, kTensor };

std::string_view ToString(ScoreKey key);
std::optional<ScoreKey> ParseScoreKey(std::string_view text);

struct RelevanceScore {
  std::string node_id;
  std::string edge_id;
  double tensor = 0.0;
  double upsilon = 0.0;  // tensor / max(weight, kWeightEpsilon)
  double weight = 0.0;
  double key = 0.0;      // tensor or upsilon, per the requested ScoreKey
  bool zero_weight = false;

  bool operator==(const RelevanceScore&) const = default;
};

struct BoundDiagnostics {
  double m = 0.0;  // triangle-inequality envelope over the selection
  int k = 0;
  std::optional<double> optimal_cost;  // C*(e), when a feasible optimum exists
  std::optional<double> alpha_bound;   // k * M * C*(e)
  // Smallest relevance among the selected nodes. The bound derivation assumes
  // it exceeds 1; nothing enforces that, so it is reported rather than assumed.
  std::optional<double> min_selected_upsilon;
};

struct RankResult {
  std::string edge_id;
  ScoreKey key = ScoreKey::kUpsilon;
  std::vector<RelevanceScore> ranked;  // descending
  std::vector<std::string> selected;
  double total_cost = 0.0;
  bool short_selection = false;
  bool zero_weight_selected = false;
  BoundDiagnostics bound;
};

struct ScoreOptions {
  kernels::Isa isa = kernels::Best();
  std::size_t threads = 0;  // 0: HYPERANK_THREADS, then hardware
};

// One score per candidate, in node input order. Candidates are the edge
// members when present, otherwise all nodes. Deterministic for any thread
// count and kernel variant.
std::vector<RelevanceScore> ScoreAll(const Hypergraph& h, const TaskEdge& edge,
                                     const MetricSet& m, ScoreKey key,
                                     const ScoreOptions& options = {});

// As ScoreAll over an explicit candidate list (positions into h.nodes).
std::vector<RelevanceScore> ScoreCandidates(
    const Hypergraph& h, const TaskEdge& edge, const MetricSet& m,
    ScoreKey key, std::span<const std::size_t> candidates,
    const ScoreOptions& options = {});

// Total order used by Rank: key desc, weight asc, node id asc, edge id asc.
bool RanksBefore(const RelevanceScore& a, const RelevanceScore& b);

// Sorts by RanksBefore and selects the first min(k, n). `comparisons`, when
// given, receives the number of comparator calls. Throws Error(kUsage) for
// k < 1. Bound diagnostics other than k are left for Allocate to fill.
RankResult Rank(std::vector<RelevanceScore> scores, int k,
                std::size_t* comparisons = nullptr);

struct AllocateOptions {
  ScoreKey key = ScoreKey::kUpsilon;
  // Restrict candidates to nodes meeting the edge requirement (capacity
  // attributes at least, latency-like attributes at most the requirement).
  bool feasible_only = false;
  ScoreOptions scoring;
};

// One RankResult per edge, edges independent.
std::vector<RankResult> Allocate(const Hypergraph& h, const MetricSet& m,
                                 const AllocateOptions& options = {});
RankResult AllocateEdge(const Hypergraph& h, const TaskEdge& edge,
                        const MetricSet& m, const AllocateOptions& options = {});

struct ApproximationReport {
  double ratio = 0.0;        // C_alg / C*
  double alpha_bound = 0.0;  // k * M * C*
  bool within_bound = false;
};

// Throws Error(kDegenerate) when optimal_cost <= 0.
ApproximationReport MakeApproximationReport(const RankResult& result,
                                            double optimal_cost, double m_bound);

nlohmann::json ToJson(const RankResult& result, bool verbose);

}  // namespace hyperank

#endif  // HYPERANK_RANK_HPP_
