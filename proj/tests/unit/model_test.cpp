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

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "hyperank/error.hpp"
#include "hyperank/instance_io.hpp"
#include "hyperank/model.hpp"
#include "test_support.hpp"

namespace hyperank {
namespace {

AttributeSchema TwoAttributes() {
  return {{{"cpu", "cores", AttributeKind::kCapacity},
           {"cost", "units", AttributeKind::kCost}}};
}

Hypergraph Small() {
  Hypergraph h;
  h.schema = TwoAttributes();
  h.nodes = {{"a", {4, 10}, 10}, {"b", {8, 20}, 20}};
  h.edges = {{"e", {4, 0}, 1, std::nullopt}};
  return h;
}

bool Mentions(const ValidationReport& report, const std::string& needle) {
  for (const Violation& v : report) {
    if (v.path.find(needle) != std::string::npos ||
        v.message.find(needle) != std::string::npos) {
      return true;
    }
  }
  return false;
}

TEST_CASE("empty hypergraph is valid") {
  CHECK(Validate(Hypergraph{}).empty());
}

TEST_CASE("k of zero is one violation") {
  Hypergraph h = Small();
  h.edges[0].k = 0;
  const ValidationReport report = Validate(h);
  REQUIRE(report.size() == 1);
  CHECK(report[0].message.find("k must be ≥ 1") != std::string::npos);
}

TEST_CASE("dangling member is named") {
  Hypergraph h = Small();
  h.edges[0].members = std::vector<std::string>{"a", "vX"};
  const ValidationReport report = Validate(h);
  REQUIRE(report.size() == 1);
  CHECK(Mentions(report, "vX"));
}

TEST_CASE("each invariant breach is reported") {
  struct Mutation {
    const char* name;
    void (*apply)(Hypergraph&);
    const char* needle;
  };
  const Mutation mutations[] = {
      {"duplicate node", [](Hypergraph& h) { h.nodes[1].id = "a"; }, "a"},
      {"empty node id", [](Hypergraph& h) { h.nodes[0].id = ""; }, "id"},
      {"short metadata", [](Hypergraph& h) { h.nodes[0].metadata.pop_back(); }, "metadata"},
      {"negative capacity", [](Hypergraph& h) { h.nodes[0].metadata[0] = -1; }, "cpu"},
      {"nan value", [](Hypergraph& h) { h.nodes[1].metadata[0] = std::nan(""); }, "cpu"},
      {"weight mismatch", [](Hypergraph& h) { h.nodes[0].weight = 11; }, "weight"},
      {"negative weight",
       [](Hypergraph& h) {
         h.nodes[0].weight = -1;
         h.nodes[0].metadata[1] = -1;
       },
       "weight"},
      {"duplicate edge", [](Hypergraph& h) { h.edges.push_back(h.edges[0]); }, "e"},
      {"short requirement", [](Hypergraph& h) { h.edges[0].requirement = {1}; }, "requirement"},
      {"duplicate member",
       [](Hypergraph& h) { h.edges[0].members = std::vector<std::string>{"a", "a"}; },
       "a"},
      {"k over members",
       [](Hypergraph& h) {
         h.edges[0].members = std::vector<std::string>{"a"};
         h.edges[0].k = 2;
       },
       "k"},
      {"duplicate attribute",
       [](Hypergraph& h) { h.schema.attributes[1].name = "cpu"; },
       "cpu"},
  };
  for (const Mutation& m : mutations) {
    CAPTURE(m.name);
    Hypergraph h = Small();
    REQUIRE(Validate(h).empty());
    m.apply(h);
    const ValidationReport report = Validate(h);
    CHECK(!report.empty());
    CHECK(Mentions(report, m.needle));
  }
}

TEST_CASE("latency-like values must be positive") {
  Hypergraph h = Small();
  h.schema.attributes[0].kind = AttributeKind::kLatencyLike;
  h.nodes[0].metadata[0] = 0;
  CHECK(Mentions(Validate(h), "cpu"));
}

TEST_CASE("appendix fixture loads") {
  const Hypergraph h = testing_support::AppendixFixture();
  CHECK(h.nodes.size() == 6);
  CHECK(h.schema.size() == 6);
  CHECK(h.schema.CostIndex() == std::optional<std::size_t>(5));
  CHECK(h.nodes[0].metadata == MetadataVector{16, 32, 2.0, 500, 10, 200});
  // Omitted weights come from the cost attribute.
  CHECK(h.nodes[3].weight == 60);
  CHECK(h.edges[0].k == 1);
  CHECK(!h.edges[0].members.has_value());
}

TEST_CASE("duplicate node id in a document is a validation error") {
  const std::string doc = R"({"schema":[{"name":"x","unit":"u","kind":"capacity"}],
    "nodes":[{"id":"a","metadata":[1],"weight":1},{"id":"a","metadata":[2],"weight":1}],
    "edges":[]})";
  try {
    LoadInstance(doc);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::kValidation);
    CHECK(!e.report().empty());
  }
}

TEST_CASE("empty bytes are a parse error") {
  try {
    LoadInstance("");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
  }
}

TEST_CASE("malformed document reports line and column") {
  try {
    LoadInstance("{\n  \"schema\": [,]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("wrongly typed field names its path") {
  const std::string doc = R"({"schema":[{"name":"x","unit":"u","kind":"capacity"}],
    "nodes":[{"id":"a","metadata":"oops","weight":1}],"edges":[]})";
  try {
    LoadInstance(doc);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("nodes[0].metadata") != std::string::npos);
  }
}

TEST_CASE("one node and no edges saves an empty edges array") {
  Hypergraph h;
  h.schema = TwoAttributes();
  h.nodes = {{"only", {1, 2}, 2}};
  const nlohmann::json doc = nlohmann::json::parse(SaveInstance(h));
  CHECK(doc["edges"].is_array());
  CHECK(doc["edges"].empty());
}

TEST_CASE("non-ASCII ids survive a round trip") {
  Hypergraph h = Small();
  h.nodes[0].id = "résolveur";
  const Hypergraph back = LoadInstance(SaveInstance(h));
  CHECK(back.nodes[0].id == "résolveur");
  CHECK(back == h);
}

TEST_CASE("round trip preserves random instances exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = testing_support::SmallInstance(rng, 1 + rng() % 20, 1);
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng)) {
      h.edges[0].members = std::vector<std::string>{h.nodes[0].id};
    }
    const std::string bytes = SaveInstance(h);
    const Hypergraph back = LoadInstance(bytes);
    REQUIRE(back == h);
    CHECK(SaveInstance(back) == bytes);
  }
}

TEST_CASE("candidate indices follow node order") {
  Hypergraph h = Small();
  CHECK(CandidateIndices(h, h.edges[0]) == std::vector<std::size_t>{0, 1});
  h.edges[0].members = std::vector<std::string>{"b", "a"};
  CHECK(CandidateIndices(h, h.edges[0]) == std::vector<std::size_t>{0, 1});
  h.edges[0].members = std::vector<std::string>{"b"};
  CHECK(CandidateIndices(h, h.edges[0]) == std::vector<std::size_t>{1});
}

TEST_CASE("missing file is an I/O error") {
  try {
    ReadFile("/nonexistent/hyperank/file.json");
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
    CHECK(ExitCode(e.kind()) == 3);
  }
}

}  // namespace
}  // namespace hyperank
