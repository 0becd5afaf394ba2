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

#include "hyperank/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "hyperank/error.hpp"

namespace hyperank {

std::string SemanticEntity::Label() const {
  return node_id + "@" + edge_id + "#" + operator_id;
}

ScoringContext::ScoringContext(const Hypergraph& h,
                               std::map<std::string, MetricSet> operators,
                               ScoreKey key)
    : h_(&h), operators_(std::move(operators)), key_(key),
      node_index_(h.NodeIndex()) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    edge_index_.emplace(h.edges[i].id, i);
  }
}

const ResourceNode& ScoringContext::NodeOf(const SemanticEntity& e) const {
  auto it = node_index_.find(e.node_id);
  if (it == node_index_.end()) {
    throw Error(ErrorKind::kReference,
                "entity " + e.Label() + ": unknown node '" + e.node_id + "'");
  }
  return h_->nodes[it->second];
}

const TaskEdge& ScoringContext::EdgeOf(const SemanticEntity& e) const {
  auto it = edge_index_.find(e.edge_id);
  if (it == edge_index_.end()) {
    throw Error(ErrorKind::kReference,
                "entity " + e.Label() + ": unknown edge '" + e.edge_id + "'");
  }
  return h_->edges[it->second];
}

MetricSet ScoringContext::OperatorOf(const SemanticEntity& e) const {
  if (auto it = operators_.find(e.operator_id); it != operators_.end()) {
    return it->second;
  }
  const auto colon = e.operator_id.find(':');
  if (colon != std::string::npos) {
    const auto kind = ParseMatchKind(e.operator_id.substr(0, colon));
    const std::string attribute = e.operator_id.substr(colon + 1);
    if (kind && h_->schema.IndexOf(attribute)) {
      return MetricSet{{{attribute, *kind, 1.0}}};
    }
  }
  throw Error(ErrorKind::kReference, "entity " + e.Label() +
                                         ": unknown operator '" +
                                         e.operator_id + "'");
}

double ScoringContext::Key(const SemanticEntity& e) const {
  const ResourceNode& node = NodeOf(e);
  const TaskEdge& edge = EdgeOf(e);
  const double tensor = Tensor(h_->schema, node, edge, OperatorOf(e));
  if (key_ == ScoreKey::kTensor) return tensor;
  return tensor / std::max(node.weight, kWeightEpsilon);
}

double ScoringContext::Weight(const SemanticEntity& e) const {
  return NodeOf(e).weight;
}

Ordering CompareScore(const SemanticEntity& a, const SemanticEntity& b,
                      const ScoringContext& ctx) {
  const double ka = ctx.Key(a);
  const double kb = ctx.Key(b);
  if (ka < kb) return Ordering::kLess;
  if (kb < ka) return Ordering::kGreater;
  return Ordering::kEqual;
}

SubsetRelation CompareSubset(const std::set<std::string>& a,
                             const std::set<std::string>& b) {
  if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
    return SubsetRelation::kLessOrEqual;
  }
  if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
    return SubsetRelation::kGreaterOrEqual;
  }
  return SubsetRelation::kIncomparable;
}

DependencyDag BuildDag(const std::vector<SemanticEntity>& entities,
                       const ScoringContext& ctx, const DagOptions& options) {
  DependencyDag dag;
  dag.vertices = entities;
  dag.keys.reserve(entities.size());
  dag.weights.reserve(entities.size());
  for (const SemanticEntity& e : entities) {
    dag.keys.push_back(ctx.Key(e));
    dag.weights.push_back(ctx.Weight(e));
  }
  const std::size_t n = entities.size();

  if (!options.consecutive_only) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dag.keys[i] < dag.keys[j]) dag.arcs.emplace_back(i, j);
      }
    }
    return dag;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dag.keys[a] < dag.keys[b];
  });
  // Group equal keys into levels; connect each level to the next.
  std::size_t prev_begin = 0, prev_end = 0;
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && dag.keys[order[end]] == dag.keys[order[begin]]) ++end;
    for (std::size_t p = prev_begin; p < prev_end; ++p) {
      for (std::size_t q = begin; q < end; ++q) {
        dag.arcs.emplace_back(order[p], order[q]);
      }
    }
    prev_begin = begin;
    prev_end = end;
    begin = end;
  }
  std::sort(dag.arcs.begin(), dag.arcs.end());
  return dag;
}

std::vector<std::size_t> TopoRank(const DependencyDag& dag) {
  const std::size_t n = dag.vertices.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [from, to] : dag.arcs) {
    if (from >= n || to >= n) {
      throw Error(ErrorKind::kReference, "arc references a missing vertex");
    }
    out[from].push_back(to);
    ++indegree[to];
  }

  // Pops the vertex that Rank would place last among the ready ones.
  auto after = [&](std::size_t a, std::size_t b) {
    const double wa = dag.weights.empty() ? 0.0 : dag.weights[a];
    const double wb = dag.weights.empty() ? 0.0 : dag.weights[b];
    const SemanticEntity& x = dag.vertices[a];
    const SemanticEntity& y = dag.vertices[b];
    // priority_queue pops the largest under this comparison.
    return std::tie(wa, x.node_id, x.edge_id, x.operator_id) <
           std::tie(wb, y.node_id, y.edge_id, y.operator_id);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(after)>
      ready(after);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Walk predecessors among the leftover vertices until one repeats.
  std::vector<std::vector<std::size_t>> in(n);
  for (const auto& [from, to] : dag.arcs) {
    if (indegree[from] > 0 && indegree[to] > 0) in[to].push_back(from);
  }
  std::size_t v = 0;
  while (indegree[v] == 0) ++v;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<std::size_t> walk;
  while (seen_at[v] == n) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    v = in[v].front();
  }
  // Arcs run walk[i + 1] -> walk[i], and v -> walk.back().
  std::string cycle = dag.vertices[v].Label();
  for (std::size_t i = walk.size(); i-- > seen_at[v];) {
    cycle += " -> " + dag.vertices[walk[i]].Label();
  }
  throw Error(ErrorKind::kCycle, "dependency graph has a cycle: " + cycle);
}

std::string ToDot(const DependencyDag& dag) {
  std::string out = "digraph hyperank {\n";
  for (std::size_t i = 0; i < dag.vertices.size(); ++i) {
    std::string label = dag.vertices[i].Label();
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += "  v" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
  }
  for (const auto& [from, to] : dag.arcs) {
    out += "  v" + std::to_string(from) + " -> v" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hyperank
