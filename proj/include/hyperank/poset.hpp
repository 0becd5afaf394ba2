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

#ifndef HYPERANK_POSET_HPP_
#define HYPERANK_POSET_HPP_

// Semantic entities (node, edge, operator), the score-induced and
// subset-induced partial orders over them, the dependency DAG and its
// topological ranking.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperank/metric_set.hpp"
#include "hyperank/model.hpp"
#include "hyperank/rank.hpp"

namespace hyperank {

struct SemanticEntity {
  std::string node_id;
  std::string edge_id;
  std::string operator_id;

  // "node@edge#operator"
  std::string Label() const;

  bool operator==(const SemanticEntity&) const = default;
};

// Resolves entities to relevance keys. Operator ids name a registered
// MetricSet, or take the form "<match-function>:<attribute>" for a single
// unit-weight function. Entities with different operators compare by their
// own operator's key.
class ScoringContext {
 public:
  ScoringContext(const Hypergraph& h, std::map<std::string, MetricSet> operators,
                 ScoreKey key = ScoreKey::kUpsilon);

  // Throws Error(kReference) for an unknown node, edge or operator.
  double Key(const SemanticEntity& entity) const;
  double Weight(const SemanticEntity& entity) const;

  const Hypergraph& hypergraph() const { return *h_; }

 private:
  const ResourceNode& NodeOf(const SemanticEntity& entity) const;
  const TaskEdge& EdgeOf(const SemanticEntity& entity) const;
  MetricSet OperatorOf(const SemanticEntity& entity) const;

  const Hypergraph* h_;
  std::map<std::string, MetricSet> operators_;
  ScoreKey key_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

enum class Ordering { kLess, kEqual, kGreater };

// Compares relevance keys exactly, without tolerance.
Ordering CompareScore(const SemanticEntity& a, const SemanticEntity& b,
                      const ScoringContext& ctx);

enum class SubsetRelation { kLessOrEqual, kGreaterOrEqual, kIncomparable };

// kLessOrEqual iff a is a subset of b (so equal sets give kLessOrEqual both
// ways); kGreaterOrEqual iff b is a proper subset of a.
SubsetRelation CompareSubset(const std::set<std::string>& a,
                             const std::set<std::string>& b);

struct DependencyDag {
  std::vector<SemanticEntity> vertices;
  std::vector<double> keys;
  std::vector<double> weights;
  // (from, to): key(from) < key(to)
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

struct DagOptions {
  // Emit only arcs between consecutive key levels, O(n log n) instead of
  // every comparable pair. The topological order is unchanged.
  bool consecutive_only = false;
};

DependencyDag BuildDag(const std::vector<SemanticEntity>& entities,
                       const ScoringContext& ctx, const DagOptions& options = {});

// Kahn elimination. Among ready vertices the one ranked last by the rank
// engine's tie-break goes first (heavier weight, then larger ids), so the
// reversed order reproduces Rank's descending order. Throws Error(kCycle)
// naming one cycle if the arcs are not acyclic.
std::vector<std::size_t> TopoRank(const DependencyDag& dag);

// DOT text, one vertex line per entity and one line per arc.
std::string ToDot(const DependencyDag& dag);

}  // namespace hyperank

#endif  // HYPERANK_POSET_HPP_
