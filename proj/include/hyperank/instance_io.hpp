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

#ifndef HYPERANK_INSTANCE_IO_HPP_
#define HYPERANK_INSTANCE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperank/model.hpp"
#include "json.hpp"

namespace hyperank {

// Parses the JSON instance document. Throws Error(kParse) with line/column
// or field-path context on malformed input, and ValidationError when the
// parsed instance breaks a model invariant.
Hypergraph LoadInstance(std::string_view bytes);

// Canonical serialization: object keys sorted, attribute order preserved,
// doubles printed in shortest round-trip form.
std::string SaveInstance(const Hypergraph& h);

nlohmann::json ToJson(const Hypergraph& h);

// Parses `text` as JSON, mapping syntax errors to Error(kParse) with the
// line and column of the failure.
nlohmann::json ParseJson(std::string_view text);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

}  // namespace hyperank

#endif  // HYPERANK_INSTANCE_IO_HPP_
