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

#ifndef HYPERANK_BASELINES_HPP_
#define HYPERANK_BASELINES_HPP_

// Reference allocators: exact optimum by enumeration, the equivalent
// polynomial solver, uniform random selection and naive cheapest-first.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperank/model.hpp"

namespace hyperank {

enum class Direction { kAtLeast, kAtMost, kIgnored };

// Per-attribute feasibility direction derived from the schema kinds:
// capacity needs node >= requirement, latency-like needs node <= requirement,
// cost is ignored.
class FeasibilityRule {
 public:
  explicit FeasibilityRule(const AttributeSchema& schema);

  bool Feasible(const ResourceNode& node, const TaskEdge& edge) const;
  // Index of the first attribute the node fails, if any.
  std::optional<std::size_t> FirstViolation(const ResourceNode& node,
                                            const TaskEdge& edge) const;

  const std::vector<Direction>& directions() const { return directions_; }

 private:
  std::vector<Direction> directions_;
};

struct Allocation {
  std::vector<std::string> selected;
  double total_cost = 0.0;
  bool short_selection = false;
};

inline constexpr std::size_t kExhaustiveCandidateLimit = 25;

// Minimum total weight over all feasible k-subsets of the edge candidates;
// ties resolved to the lexicographically smallest sorted id set. Throws
// Error(kUsage) above kExhaustiveCandidateLimit candidates and
// Error(kInfeasible) when fewer than k candidates are feasible.
Allocation OptimalExhaustive(const Hypergraph& h, const TaskEdge& edge, int k);

// The k lowest-weight feasible candidates (weight asc, id asc).
Allocation OptimalCheapestFeasible(const Hypergraph& h, const TaskEdge& edge,
                                   int k);

// Uniform sample of k candidates without replacement; feasibility ignored.
Allocation RandomAllocation(const Hypergraph& h, const TaskEdge& edge, int k,
                            std::uint64_t seed);

// The k cheapest candidates ignoring feasibility and relevance. Never throws
// for k > candidates; the result is flagged short instead.
Allocation GreedyByWeight(const Hypergraph& h, const TaskEdge& edge, int k);

// Sum of weights of `ids` in (weight asc, id asc) order, so equal weight
// multisets always give bit-identical totals.
double CanonicalCost(const Hypergraph& h, const std::vector<std::string>& ids);

}  // namespace hyperank

#endif  // HYPERANK_BASELINES_HPP_
