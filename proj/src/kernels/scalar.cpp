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

#include "hyperank/kernels.hpp"

namespace hyperank::kernels::scalar {

namespace {

template <typename F>
void Run(F f, double mu, double t, std::span<const double> x,
         std::span<double> acc) {
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] = acc[i] + mu * f(x[i], t);
}

}  // namespace

void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc) {
  switch (kind) {
    case MatchKind::kRatioMinMax:
      return Run(formula::RatioMinMax, mu, task_value, node_values, acc);
    case MatchKind::kSaturatingRatio:
      return Run(formula::SaturatingRatio, mu, task_value, node_values, acc);
    case MatchKind::kLogRatio:
      return Run(formula::LogRatio, mu, task_value, node_values, acc);
    case MatchKind::kBandwidthShift:
      return Run(formula::BandwidthShift, mu, task_value, node_values, acc);
    case MatchKind::kLatencyInverse:
      return Run(formula::LatencyInverse, mu, task_value, node_values, acc);
    case MatchKind::kAbsDiff:
      return Run(formula::NegAbsDiff, mu, task_value, node_values, acc);
    case MatchKind::kExactIndicator:
      return Run(formula::ExactIndicator, mu, task_value, node_values, acc);
  }
}

}  // namespace hyperank::kernels::scalar
