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

#include "hyperank/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace hyperank {
namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, "at " + path + ": " + what);
}

const json& Require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string RequireString(const json& obj, const char* key,
                          const std::string& path) {
  const json& value = Require(obj, key, path);
  if (!value.is_string()) {
    FieldError(path + "." + key, "expected string, got " +
                                     std::string(value.type_name()));
  }
  return value.get<std::string>();
}

MetadataVector ParseVector(const json& value, const std::string& path) {
  if (!value.is_array()) {
    FieldError(path, "expected array of numbers, got " +
                         std::string(value.type_name()));
  }
  MetadataVector out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      FieldError(path + "[" + std::to_string(i) + "]",
                 "expected number, got " + std::string(value[i].type_name()));
    }
    out.push_back(value[i].get<double>());
  }
  return out;
}

AttributeSchema ParseSchema(const json& value) {
  if (!value.is_array()) FieldError("schema", "expected array");
  AttributeSchema schema;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string path = "schema[" + std::to_string(i) + "]";
    const json& item = value[i];
    if (!item.is_object()) FieldError(path, "expected object");
    Attribute attr;
    attr.name = RequireString(item, "name", path);
    attr.unit = item.contains("unit") ? RequireString(item, "unit", path) : "";
    const std::string kind = RequireString(item, "kind", path);
    const auto parsed = ParseAttributeKind(kind);
    if (!parsed) FieldError(path + ".kind", "unknown attribute kind '" + kind + "'");
    attr.kind = *parsed;
    schema.attributes.push_back(std::move(attr));
  }
  return schema;
}

}  // namespace

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParse, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": " + e.what());
  }
}

Hypergraph LoadInstance(std::string_view bytes) {
  const json doc = ParseJson(bytes);
  if (!doc.is_object()) FieldError("$", "instance document must be an object");

  Hypergraph h;
  h.schema = ParseSchema(Require(doc, "schema", "$"));
  const std::optional<std::size_t> cost = h.schema.CostIndex();

  const json& nodes = Require(doc, "nodes", "$");
  if (!nodes.is_array()) FieldError("nodes", "expected array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "nodes[" + std::to_string(i) + "]";
    const json& item = nodes[i];
    if (!item.is_object()) FieldError(path, "expected object");
    ResourceNode node;
    node.id = RequireString(item, "id", path);
    node.metadata = ParseVector(Require(item, "metadata", path), path + ".metadata");
    auto weight = item.find("weight");
    if (weight != item.end() && !weight->is_null()) {
      if (!weight->is_number()) FieldError(path + ".weight", "expected number");
      node.weight = weight->get<double>();
    } else if (cost && *cost < node.metadata.size()) {
      node.weight = node.metadata[*cost];
    } else {
      FieldError(path + ".weight",
                 "weight is required when the schema has no cost attribute");
    }
    h.nodes.push_back(std::move(node));
  }

  const json& edges = Require(doc, "edges", "$");
  if (!edges.is_array()) FieldError("edges", "expected array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const json& item = edges[i];
    if (!item.is_object()) FieldError(path, "expected object");
    TaskEdge edge;
    edge.id = RequireString(item, "id", path);
    edge.requirement =
        ParseVector(Require(item, "requirement", path), path + ".requirement");
    const json& k = Require(item, "k", path);
    if (!k.is_number_integer()) FieldError(path + ".k", "expected integer");
    edge.k = k.get<int>();
    auto members = item.find("members");
    if (members != item.end() && !members->is_null()) {
      if (!members->is_array()) FieldError(path + ".members", "expected array or null");
      std::vector<std::string> ids;
      for (std::size_t j = 0; j < members->size(); ++j) {
        if (!(*members)[j].is_string()) {
          FieldError(path + ".members[" + std::to_string(j) + "]",
                     "expected string");
        }
        ids.push_back((*members)[j].get<std::string>());
      }
      edge.members = std::move(ids);
    }
    h.edges.push_back(std::move(edge));
  }

  ValidationReport report = Validate(h);
  if (!report.empty()) throw ValidationError(std::move(report));
  return h;
}

json ToJson(const Hypergraph& h) {
  json schema = json::array();
  for (const Attribute& attr : h.schema.attributes) {
    schema.push_back({{"name", attr.name},
                      {"unit", attr.unit},
                      {"kind", std::string(ToString(attr.kind))}});
  }
  json nodes = json::array();
  for (const ResourceNode& node : h.nodes) {
    nodes.push_back(
        {{"id", node.id}, {"metadata", node.metadata}, {"weight", node.weight}});
  }
  json edges = json::array();
  for (const TaskEdge& edge : h.edges) {
    json item = {{"id", edge.id},
                 {"requirement", edge.requirement},
                 {"k", edge.k},
                 {"members", nullptr}};
    if (edge.members) item["members"] = *edge.members;
    edges.push_back(std::move(item));
  }
  return {{"schema", std::move(schema)},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

std::string SaveInstance(const Hypergraph& h) {
  return ToJson(h).dump(2) + "\n";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "failed reading '" + path.string() + "'");
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace hyperank
