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

#ifndef HYPERANK_TABLE_SELECT_HPP_
#define HYPERANK_TABLE_SELECT_HPP_

// Ranks "table.column" schema entities against a natural-language question
// by cosine similarity of lexical vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperank {

struct SchemaEntity {
  std::string table;
  std::string column;
  std::optional<std::string> context;

  // table + "." + column, then " " + context when present.
  std::string Concat() const;
};

// Sparse, L2-normalized term-frequency vector; terms sorted by bucket.
struct LexicalVector {
  std::vector<std::pair<std::uint32_t, double>> terms;

  bool empty() const { return terms.empty(); }
  bool operator==(const LexicalVector&) const = default;
};

double Cosine(const LexicalVector& a, const LexicalVector& b);

class Vectorizer {
 public:
  virtual ~Vectorizer() = default;
  virtual LexicalVector Vectorize(std::string_view text) const = 0;
};

// Lowercases ASCII, collapses whitespace runs to one space and trims, then
// hashes overlapping byte trigrams (FNV-1a, 64-bit) into 2^18 buckets. Text
// shorter than three bytes contributes itself as a single gram.
class TrigramVectorizer final : public Vectorizer {
 public:
  static constexpr std::uint32_t kBuckets = 1u << 18;
  LexicalVector Vectorize(std::string_view text) const override;
};

LexicalVector Vectorize(std::string_view text);

struct EntityScore {
  std::string entity;  // the concatenation
  double score = 0.0;
};

struct TableRanking {
  std::vector<EntityScore> top;
  std::vector<std::string> warnings;
};

// Descending cosine, ties by concatenation ascending; the first k are kept.
// A question with no grams scores every entity 0 and adds a warning.
// Throws Error(kUsage) for an empty entity list.
TableRanking RankEntities(std::string_view question,
                          const std::vector<SchemaEntity>& entities,
                          std::size_t k,
                          const Vectorizer& vectorizer = TrigramVectorizer());

// [{"table","column","context"}]
std::vector<SchemaEntity> LoadSchemaEntities(std::string_view bytes);

}  // namespace hyperank

#endif  // HYPERANK_TABLE_SELECT_HPP_
