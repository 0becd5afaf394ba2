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

#include "hyperank/baselines.hpp"

#include <algorithm>

#include "hyperank/error.hpp"
#include "hyperank/rng.hpp"

namespace hyperank {
namespace {

bool CheaperThan(const ResourceNode* a, const ResourceNode* b) {
  if (a->weight != b->weight) return a->weight < b->weight;
  return a->id < b->id;
}

std::vector<const ResourceNode*> Candidates(const Hypergraph& h,
                                            const TaskEdge& edge) {
  std::vector<const ResourceNode*> out;
  for (std::size_t i : CandidateIndices(h, edge)) out.push_back(&h.nodes[i]);
  return out;
}

void RequireK(int k) {
  if (k < 1) {
    throw Error(ErrorKind::kUsage, "k must be >= 1, got " + std::to_string(k));
  }
}

// Feasible candidates in (weight asc, id asc) order. Throws kInfeasible
// naming the attribute that excluded the most candidates when fewer than k
// remain.
std::vector<const ResourceNode*> FeasibleSorted(const Hypergraph& h,
                                                const TaskEdge& edge, int k) {
  const FeasibilityRule rule(h.schema);
  std::vector<const ResourceNode*> feasible;
  std::vector<std::size_t> excluded(h.schema.size(), 0);
  const auto candidates = Candidates(h, edge);
  for (const ResourceNode* node : candidates) {
    if (auto bad = rule.FirstViolation(*node, edge)) {
      ++excluded[*bad];
    } else {
      feasible.push_back(node);
    }
  }
  if (feasible.size() < static_cast<std::size_t>(k)) {
    std::string message = "edge '" + edge.id + "': " +
                          std::to_string(feasible.size()) + " of " +
                          std::to_string(candidates.size()) +
                          " candidates feasible, k = " + std::to_string(k);
    const auto worst = std::max_element(excluded.begin(), excluded.end());
    if (worst != excluded.end() && *worst > 0) {
      const auto& attr = h.schema.attributes[worst - excluded.begin()];
      message += "; binding attribute '" + attr.name + "' excluded " +
                 std::to_string(*worst);
    }
    throw Error(ErrorKind::kInfeasible, message);
  }
  std::sort(feasible.begin(), feasible.end(), CheaperThan);
  return feasible;
}

std::vector<std::string> Ids(const std::vector<const ResourceNode*>& nodes) {
  std::vector<std::string> ids;
  ids.reserve(nodes.size());
  for (const ResourceNode* n : nodes) ids.push_back(n->id);
  return ids;
}

}  // namespace

FeasibilityRule::FeasibilityRule(const AttributeSchema& schema) {
  directions_.reserve(schema.size());
  for (const Attribute& attr : schema.attributes) {
    switch (attr.kind) {
      case AttributeKind::kCapacity: directions_.push_back(Direction::kAtLeast); break;
      case AttributeKind::kLatencyLike: directions_.push_back(Direction::kAtMost); break;
      case AttributeKind::kCost: directions_.push_back(Direction::kIgnored); break;
    }
  }
}

std::optional<std::size_t> FeasibilityRule::FirstViolation(
    const ResourceNode& node, const TaskEdge& edge) const {
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    const double have = node.metadata[i];
    const double need = edge.requirement[i];
    if (directions_[i] == Direction::kAtLeast && have < need) return i;
    if (directions_[i] == Direction::kAtMost && have > need) return i;
  }
  return std::nullopt;
}

bool FeasibilityRule::Feasible(const ResourceNode& node,
                               const TaskEdge& edge) const {
  return !FirstViolation(node, edge).has_value();
}

double CanonicalCost(const Hypergraph& h, const std::vector<std::string>& ids) {
  const auto index = h.NodeIndex();
  std::vector<const ResourceNode*> nodes;
  nodes.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorKind::kReference, "unknown node id '" + id + "'");
    }
    nodes.push_back(&h.nodes[it->second]);
  }
  std::sort(nodes.begin(), nodes.end(), CheaperThan);
  double total = 0.0;
  for (const ResourceNode* n : nodes) total += n->weight;
  return total;
}

Allocation OptimalExhaustive(const Hypergraph& h, const TaskEdge& edge, int k) {
  RequireK(k);
  const std::size_t candidate_count = CandidateIndices(h, edge).size();
  if (candidate_count > kExhaustiveCandidateLimit) {
    throw Error(ErrorKind::kUsage,
                "exhaustive search is limited to " +
                    std::to_string(kExhaustiveCandidateLimit) +
                    " candidates, edge '" + edge.id + "' has " +
                    std::to_string(candidate_count));
  }
  const auto feasible = FeasibleSorted(h, edge, k);
  const std::size_t n = feasible.size();
  const std::size_t kk = static_cast<std::size_t>(k);

  // Indices are visited in increasing order, so every subset is summed in
  // ascending weight order.
  std::vector<std::size_t> pick(kk);
  std::vector<std::size_t> best_pick;
  std::vector<std::string> best_ids;
  double best_cost = 0.0;

  auto sorted_ids = [&](const std::vector<std::size_t>& p) {
    std::vector<std::string> ids;
    ids.reserve(p.size());
    for (std::size_t i : p) ids.push_back(feasible[i]->id);
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start,
                     double cost) -> void {
    if (depth == kk) {
      if (best_pick.empty() || cost < best_cost) {
        best_cost = cost;
        best_pick = pick;
        best_ids.clear();
      } else if (cost == best_cost) {
        if (best_ids.empty()) best_ids = sorted_ids(best_pick);
        auto ids = sorted_ids(pick);
        if (ids < best_ids) {
          best_pick = pick;
          best_ids = std::move(ids);
        }
      }
      return;
    }
    for (std::size_t i = start; i + (kk - depth) <= n; ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1, cost + feasible[i]->weight);
    }
  };
  recurse(recurse, 0, 0, 0.0);

  Allocation out;
  for (std::size_t i : best_pick) out.selected.push_back(feasible[i]->id);
  out.total_cost = CanonicalCost(h, out.selected);
  return out;
}

Allocation OptimalCheapestFeasible(const Hypergraph& h, const TaskEdge& edge,
                                   int k) {
  RequireK(k);
  auto feasible = FeasibleSorted(h, edge, k);
  feasible.resize(static_cast<std::size_t>(k));
  Allocation out;
  out.selected = Ids(feasible);
  out.total_cost = CanonicalCost(h, out.selected);
  return out;
}

Allocation RandomAllocation(const Hypergraph& h, const TaskEdge& edge, int k,
                            std::uint64_t seed) {
  RequireK(k);
  auto candidates = Candidates(h, edge);
  const std::size_t kk = static_cast<std::size_t>(k);
  if (kk > candidates.size()) {
    throw Error(ErrorKind::kInfeasible,
                "edge '" + edge.id + "': k = " + std::to_string(k) +
                    " exceeds " + std::to_string(candidates.size()) +
                    " candidates");
  }
  SplitMix64 rng(seed);
  // Partial Fisher-Yates: positions [0, k) end up a uniform k-sample.
  for (std::size_t i = 0; i < kk; ++i) {
    const std::size_t j = i + rng.NextBelow(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(kk);
  Allocation out;
  out.selected = Ids(candidates);
  out.total_cost = CanonicalCost(h, out.selected);
  return out;
}

Allocation GreedyByWeight(const Hypergraph& h, const TaskEdge& edge, int k) {
  RequireK(k);
  auto candidates = Candidates(h, edge);
  std::sort(candidates.begin(), candidates.end(), CheaperThan);
  Allocation out;
  if (candidates.size() < static_cast<std::size_t>(k)) {
    out.short_selection = true;
  } else {
    candidates.resize(static_cast<std::size_t>(k));
  }
  out.selected = Ids(candidates);
  out.total_cost = CanonicalCost(h, out.selected);
  return out;
}

}  // namespace hyperank
