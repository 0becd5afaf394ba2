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

#ifndef HYPERANK_MATCH_HPP_
#define HYPERANK_MATCH_HPP_

// Per-attribute matching functions f(node_value, task_value). Every function
// is oriented as a similarity (higher is better); the abs-diff distance is
// registered negated.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string_view>

namespace hyperank {

enum class MatchKind {
  kRatioMinMax,      // min(n, t) / max(n, t)
  kSaturatingRatio,  // n >= t ? 1 : n / t
  kLogRatio,         // log(1 + min(n, t)) / log(1 + max(n, t))
  kBandwidthShift,   // n / (t + 1), unbounded above
  kLatencyInverse,   // 1 / (1 + n / t)
  kAbsDiff,          // -|n - t|
  kExactIndicator,   // n == t ? 1 : 0; a test helper, not a standard matcher
};

inline constexpr std::array<MatchKind, 7> kAllMatchKinds = {
    MatchKind::kRatioMinMax,    MatchKind::kSaturatingRatio,
    MatchKind::kLogRatio,       MatchKind::kBandwidthShift,
    MatchKind::kLatencyInverse, MatchKind::kAbsDiff,
    MatchKind::kExactIndicator,
};

std::string_view ToString(MatchKind kind);
std::optional<MatchKind> ParseMatchKind(std::string_view name);

namespace formula {

// The closed forms. Both the scalar reference kernel and MatchScore call
// these; the SIMD kernels reproduce them operation for operation.
inline double RatioMinMax(double n, double t) {
  return std::min(n, t) / std::max(n, t);
}
inline double SaturatingRatio(double n, double t) {
  return (n >= t) ? 1.0 : n / t;
}
inline double LogRatio(double n, double t) {
  return std::log(1 + std::min(n, t)) / std::log(1 + std::max(n, t));
}
inline double BandwidthShift(double n, double t) { return n / (t + 1); }
inline double LatencyInverse(double n, double t) {
  return 1.0 / (1.0 + n / t);
}
inline double AbsDiffDistance(double n, double t) { return std::abs(n - t); }
inline double NegAbsDiff(double n, double t) { return -std::abs(n - t); }
inline double ExactIndicator(double n, double t) { return n == t ? 1.0 : 0.0; }

inline double Evaluate(MatchKind kind, double n, double t) {
  switch (kind) {
    case MatchKind::kRatioMinMax: return RatioMinMax(n, t);
    case MatchKind::kSaturatingRatio: return SaturatingRatio(n, t);
    case MatchKind::kLogRatio: return LogRatio(n, t);
    case MatchKind::kBandwidthShift: return BandwidthShift(n, t);
    case MatchKind::kLatencyInverse: return LatencyInverse(n, t);
    case MatchKind::kAbsDiff: return NegAbsDiff(n, t);
    case MatchKind::kExactIndicator: return ExactIndicator(n, t);
  }
  return 0.0;
}

}  // namespace formula

// Domains (all inputs finite):
//   ratio-minmax       n, t >= 0 and max(n, t) > 0
//   saturating-ratio   n >= 0, t > 0
//   log-ratio          n, t > 0
//   bandwidth-shift    n >= 0, t >= 0
//   latency-inverse    n >= 0, t > 0
//   abs-diff, exact-indicator   any finite values
bool InDomain(MatchKind kind, double node_value, double task_value);

// Throws Error(kDomain) naming the function and both inputs.
void RequireDomain(MatchKind kind, double node_value, double task_value);

// Checked evaluation: the closed form of `kind` after a domain check.
double MatchScore(MatchKind kind, double node_value, double task_value);

}  // namespace hyperank

#endif  // HYPERANK_MATCH_HPP_
