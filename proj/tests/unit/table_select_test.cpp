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

#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperank/error.hpp"
#include "hyperank/instance_io.hpp"
#include "hyperank/table_select.hpp"
#include "test_support.hpp"

namespace hyperank {
namespace {

// Unhashed trigram counts, computed independently of the vectorizer.
std::map<std::string, double> Trigrams(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!s.empty() && s.back() != ' ') s += ' ';
    } else {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  std::map<std::string, double> out;
  if (s.empty()) return out;
  if (s.size() < 3) {
    out[s] = 1;
    return out;
  }
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) out[s.substr(i, 3)] += 1;
  return out;
}

double StringCosine(const std::string& a, const std::string& b) {
  const auto ta = Trigrams(a), tb = Trigrams(b);
  double dot = 0, na = 0, nb = 0;
  for (const auto& [g, c] : ta) {
    na += c * c;
    if (auto it = tb.find(g); it != tb.end()) dot += c * it->second;
  }
  for (const auto& [g, c] : tb) nb += c * c;
  if (na == 0 || nb == 0) return 0;
  return dot / std::sqrt(na * nb);
}

double Norm(const LexicalVector& v) {
  double s = 0;
  for (const auto& [b, x] : v.terms) s += x * x;
  return std::sqrt(s);
}

class FixedVectorizer final : public Vectorizer {
 public:
  LexicalVector Vectorize(std::string_view text) const override {
    LexicalVector v;
    if (!text.empty()) v.terms = {{static_cast<std::uint32_t>(text.size() % 2), 1.0}};
    return v;
  }
};

TEST_CASE("vectorizer basics") {
  CHECK(Vectorize("").empty());
  CHECK(Vectorize("   \t\n").empty());
  CHECK(Vectorize("abc") == Vectorize("ABC"));
  CHECK(Vectorize("orders   total") == Vectorize("Orders total"));
  CHECK(Vectorize(" x ") == Vectorize("x"));
  const std::string s = "customers.name full legal name";
  CHECK(Vectorize(s) == Vectorize(s));
  CHECK(std::abs(Norm(Vectorize(s)) - 1.0) <= 1e-12);
  CHECK(std::abs(Norm(Vectorize("ab")) - 1.0) <= 1e-12);
}

TEST_CASE("cosine agrees with unhashed trigrams") {
  std::mt19937_64 rng(71);
  const std::string alphabet = "abcdefghij .ABC_";
  auto word = [&] {
    std::string w;
    const std::size_t n = rng() % 24;
    for (std::size_t i = 0; i < n; ++i) w += alphabet[rng() % alphabet.size()];
    return w;
  };
  for (int i = 0; i < 2000; ++i) {
    const std::string a = word(), b = word();
    const double got = Cosine(Vectorize(a), Vectorize(b));
    CHECK(got >= 0.0);
    CHECK(got <= 1.0);
    CHECK(std::abs(got - StringCosine(a, b)) <= 1e-12);
  }
}

TEST_CASE("self-similarity and orthogonality") {
  const auto entities = LoadSchemaEntities(
      ReadFile(testing_support::DataPath("tables_schema.json")));
  for (const SchemaEntity& e : entities) {
    const TableRanking r = RankEntities(e.Concat(), entities, 1);
    REQUIRE(r.top.size() == 1);
    CHECK(r.top[0].entity == e.Concat());
    CHECK(std::abs(r.top[0].score - 1.0) <= 1e-9);
  }
  // No shared trigram between the question and "users.email".
  const std::string question = "zzq kkw";
  REQUIRE(StringCosine(question, "users.email") == 0.0);
  const TableRanking r = RankEntities(question, {{"users", "email", std::nullopt}}, 1);
  CHECK(r.top[0].score == 0.0);
}

TEST_CASE("question picks the matching column") {
  const std::vector<SchemaEntity> two = {{"orders", "total", std::nullopt},
                                         {"users", "email", std::nullopt}};
  const TableRanking r = RankEntities("customer orders total", two, 2);
  REQUIRE(r.top.size() == 2);
  CHECK(r.top[0].entity == "orders.total");
  CHECK(r.top[0].score > r.top[1].score);
  CHECK(std::abs(r.top[0].score - StringCosine("customer orders total", "orders.total")) <=
        1e-12);
}

TEST_CASE("context is appended to the concatenation") {
  const SchemaEntity plain{"orders", "total", std::nullopt};
  const SchemaEntity rich{"products", "price", "unit price"};
  CHECK(plain.Concat() == "orders.total");
  CHECK(rich.Concat() == "products.price unit price");
}

TEST_CASE("empty question warns and keeps tie order") {
  const std::vector<SchemaEntity> es = {{"b", "y", std::nullopt}, {"a", "x", std::nullopt}};
  const TableRanking r = RankEntities("  ", es, 5);
  CHECK(r.warnings.size() == 1);
  REQUIRE(r.top.size() == 2);
  CHECK(r.top[0].entity == "a.x");
  CHECK(r.top[0].score == 0.0);
  CHECK(r.top[1].score == 0.0);
  CHECK_THROWS_AS(RankEntities("q", {}, 1), Error);
}

TEST_CASE("vectorizer is injectable") {
  const std::vector<SchemaEntity> es = {{"t", "ab", std::nullopt}, {"t", "abc", std::nullopt}};
  // "t.ab" has even length, like the question.
  const TableRanking r = RankEntities("qq", es, 2, FixedVectorizer());
  CHECK(r.top[0].entity == "t.ab");
  CHECK(r.top[0].score == 1.0);
  CHECK(r.top[1].score == 0.0);
}

TEST_CASE("schema documents") {
  const auto es = LoadSchemaEntities(ReadFile(testing_support::DataPath("tables_schema.json")));
  CHECK(es.size() == 5);
  CHECK(es[1].context == std::optional<std::string>("date the order was placed"));
  CHECK_THROWS_AS(LoadSchemaEntities(R"([{"table":"","column":"x"}])"), Error);
}

}  // namespace
}  // namespace hyperank
