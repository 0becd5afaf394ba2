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

#ifndef HYPERANK_ERROR_HPP_
#define HYPERANK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperank {

enum class ErrorKind {
  kValidation,
  kConfiguration,
  kParse,
  kDomain,
  kUsage,
  kReference,
  kCycle,
  kInfeasible,
  kDegenerate,
  kIo,
};

std::string_view ToString(ErrorKind kind);

// Process exit code for the CLI: 1 validation/configuration, 2 infeasibility,
// 3 I/O.
int ExitCode(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// One broken invariant, located by a path such as "nodes[n3].metadata[cpu]".
struct Violation {
  std::string path;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace hyperank

#endif  // HYPERANK_ERROR_HPP_
