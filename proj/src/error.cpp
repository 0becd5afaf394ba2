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

#include "hyperank/error.hpp"

namespace hyperank {
namespace {

std::string Summarize(const ValidationReport& report) {
  std::string out = "instance failed validation (" +
                    std::to_string(report.size()) + " violation" +
                    (report.size() == 1 ? "" : "s") + ")";
  for (const Violation& v : report) {
    out += "\n  " + v.path + ": " + v.message;
  }
  return out;
}

}  // namespace

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kReference: return "reference";
    case ErrorKind::kCycle: return "cycle";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasible: return 2;
    case ErrorKind::kIo: return 3;
    default: return 1;
  }
}

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorKind::kValidation, Summarize(report)),
      report_(std::move(report)) {}

}  // namespace hyperank
