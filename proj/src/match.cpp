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

#include "hyperank/match.hpp"

#include <cstdio>
#include <string>

#include "hyperank/error.hpp"

namespace hyperank {

std::string_view ToString(MatchKind kind) {
  switch (kind) {
    case MatchKind::kRatioMinMax: return "ratio-minmax";
    case MatchKind::kSaturatingRatio: return "saturating-ratio";
    case MatchKind::kLogRatio: return "log-ratio";
    case MatchKind::kBandwidthShift: return "bandwidth-shift";
    case MatchKind::kLatencyInverse: return "latency-inverse";
    case MatchKind::kAbsDiff: return "abs-diff";
    case MatchKind::kExactIndicator: return "exact-indicator";
  }
  return "unknown";
}

std::optional<MatchKind> ParseMatchKind(std::string_view name) {
  for (MatchKind kind : kAllMatchKinds) {
    if (ToString(kind) == name) return kind;
  }
  return std::nullopt;
}

bool InDomain(MatchKind kind, double n, double t) {
  if (!std::isfinite(n) || !std::isfinite(t)) return false;
  switch (kind) {
    case MatchKind::kRatioMinMax: return n >= 0 && t >= 0 && std::max(n, t) > 0;
    case MatchKind::kSaturatingRatio: return n >= 0 && t > 0;
    case MatchKind::kLogRatio: return n > 0 && t > 0;
    case MatchKind::kBandwidthShift: return n >= 0 && t >= 0;
    case MatchKind::kLatencyInverse: return n >= 0 && t > 0;
    case MatchKind::kAbsDiff:
    case MatchKind::kExactIndicator: return true;
  }
  return false;
}

void RequireDomain(MatchKind kind, double n, double t) {
  if (InDomain(kind, n, t)) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s(node_value=%.17g, task_value=%.17g) is outside the function's domain",
                std::string(ToString(kind)).c_str(), n, t);
  throw Error(ErrorKind::kDomain, buf);
}

double MatchScore(MatchKind kind, double n, double t) {
  RequireDomain(kind, n, t);
  return formula::Evaluate(kind, n, t);
}

}  // namespace hyperank
