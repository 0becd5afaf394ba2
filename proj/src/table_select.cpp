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

#include "hyperank/table_select.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hyperank/error.hpp"
#include "hyperank/instance_io.hpp"

namespace hyperank {
namespace {

std::string Normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u == ' ' || u == '\t' || u == '\n' || u == '\r' || u == '\f' || u == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += (u >= 'A' && u <= 'Z') ? static_cast<char>(u - 'A' + 'a') : c;
  }
  return out;
}

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string SchemaEntity::Concat() const {
  std::string out = table + "." + column;
  if (context) out += " " + *context;
  return out;
}

LexicalVector TrigramVectorizer::Vectorize(std::string_view text) const {
  const std::string norm = Normalize(text);
  LexicalVector v;
  if (norm.empty()) return v;
  std::map<std::uint32_t, double> counts;
  auto add = [&](std::string_view gram) {
    counts[static_cast<std::uint32_t>(Fnv1a(gram) % kBuckets)] += 1.0;
  };
  if (norm.size() < 3) {
    add(norm);
  } else {
    for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
      add(std::string_view(norm).substr(i, 3));
    }
  }
  double norm2 = 0.0;
  for (const auto& [bucket, count] : counts) norm2 += count * count;
  const double scale = 1.0 / std::sqrt(norm2);
  v.terms.reserve(counts.size());
  for (const auto& [bucket, count] : counts) v.terms.emplace_back(bucket, count * scale);
  return v;
}

LexicalVector Vectorize(std::string_view text) {
  return TrigramVectorizer().Vectorize(text);
}

double Cosine(const LexicalVector& a, const LexicalVector& b) {
  double dot = 0.0;
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() && j != b.terms.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return std::clamp(dot, 0.0, 1.0);
}

TableRanking RankEntities(std::string_view question,
                          const std::vector<SchemaEntity>& entities,
                          std::size_t k, const Vectorizer& vectorizer) {
  if (entities.empty()) {
    throw Error(ErrorKind::kUsage, "table ranking needs at least one entity");
  }
  TableRanking ranking;
  const LexicalVector q = vectorizer.Vectorize(question);
  if (q.empty()) {
    ranking.warnings.push_back(
        "question has no lexical content; all entities score 0");
  }
  std::vector<EntityScore> scored;
  scored.reserve(entities.size());
  for (const SchemaEntity& e : entities) {
    std::string concat = e.Concat();
    const double score = q.empty() ? 0.0 : Cosine(q, vectorizer.Vectorize(concat));
    scored.push_back({std::move(concat), score});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const EntityScore& a, const EntityScore& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.entity < b.entity;
                   });
  if (scored.size() > k) scored.resize(k);
  ranking.top = std::move(scored);
  return ranking;
}

std::vector<SchemaEntity> LoadSchemaEntities(std::string_view bytes) {
  const nlohmann::json doc = ParseJson(bytes);
  if (!doc.is_array()) throw Error(ErrorKind::kParse, "schema document must be an array");
  std::vector<SchemaEntity> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string path = "entities[" + std::to_string(i) + "]";
    auto text = [&](const char* key) {
      if (!item.is_object() || !item.contains(key) || !item[key].is_string() ||
          item[key].get<std::string>().empty()) {
        throw Error(ErrorKind::kParse, path + "." + key + ": expected non-empty string");
      }
      return item[key].get<std::string>();
    };
    SchemaEntity e;
    e.table = text("table");
    e.column = text("column");
    if (item.contains("context") && !item["context"].is_null()) {
      if (!item["context"].is_string()) {
        throw Error(ErrorKind::kParse, path + ".context: expected string");
      }
      e.context = item["context"].get<std::string>();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace hyperank
