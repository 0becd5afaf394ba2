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

// AArch64 Advanced SIMD variant, two doubles per vector.

#include <arm_neon.h>

#include <cmath>

#include "hyperank/kernels.hpp"

namespace hyperank::kernels::neon {

namespace {

constexpr std::size_t kLanes = 2;

inline float64x2_t StdMin(float64x2_t n, float64x2_t t) {
  return vbslq_f64(vcltq_f64(t, n), t, n);
}
inline float64x2_t StdMax(float64x2_t n, float64x2_t t) {
  return vbslq_f64(vcltq_f64(n, t), t, n);
}

template <typename Lane, typename Tail>
void Run(Lane lane, Tail tail, double mu, double t,
         std::span<const double> x, std::span<double> acc) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % kLanes;
  const float64x2_t vmu = vdupq_n_f64(mu);
  const float64x2_t vt = vdupq_n_f64(t);
  for (std::size_t i = 0; i < body; i += kLanes) {
    const float64x2_t f = lane(vld1q_f64(x.data() + i), vt);
    const float64x2_t a = vld1q_f64(acc.data() + i);
    // Separate multiply and add: vfmaq would round once instead of twice.
    vst1q_f64(acc.data() + i, vaddq_f64(a, vmulq_f64(vmu, f)));
  }
  for (std::size_t i = body; i < n; ++i) acc[i] = acc[i] + mu * tail(x[i], t);
}

}  // namespace

void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc) {
  const float64x2_t one = vdupq_n_f64(1.0);
  switch (kind) {
    case MatchKind::kRatioMinMax:
      return Run(
          [](float64x2_t n, float64x2_t t) {
            return vdivq_f64(StdMin(n, t), StdMax(n, t));
          },
          formula::RatioMinMax, mu, task_value, node_values, acc);
    case MatchKind::kSaturatingRatio:
      return Run(
          [one](float64x2_t n, float64x2_t t) {
            return vbslq_f64(vcgeq_f64(n, t), one, vdivq_f64(n, t));
          },
          formula::SaturatingRatio, mu, task_value, node_values, acc);
    case MatchKind::kLogRatio:
      return Run(
          [one](float64x2_t n, float64x2_t t) {
            double lo[kLanes];
            double hi[kLanes];
            vst1q_f64(lo, vaddq_f64(one, StdMin(n, t)));
            vst1q_f64(hi, vaddq_f64(one, StdMax(n, t)));
            for (std::size_t j = 0; j < kLanes; ++j) {
              lo[j] = std::log(lo[j]) / std::log(hi[j]);
            }
            return vld1q_f64(lo);
          },
          formula::LogRatio, mu, task_value, node_values, acc);
    case MatchKind::kBandwidthShift: {
      const double shifted = task_value + 1;
      return Run(
          [shifted](float64x2_t n, float64x2_t) {
            return vdivq_f64(n, vdupq_n_f64(shifted));
          },
          formula::BandwidthShift, mu, task_value, node_values, acc);
    }
    case MatchKind::kLatencyInverse:
      return Run(
          [one](float64x2_t n, float64x2_t t) {
            return vdivq_f64(one, vaddq_f64(one, vdivq_f64(n, t)));
          },
          formula::LatencyInverse, mu, task_value, node_values, acc);
    case MatchKind::kAbsDiff:
      return Run(
          [](float64x2_t n, float64x2_t t) {
            return vnegq_f64(vabsq_f64(vsubq_f64(n, t)));
          },
          formula::NegAbsDiff, mu, task_value, node_values, acc);
    case MatchKind::kExactIndicator:
      return Run(
          [one](float64x2_t n, float64x2_t t) {
            return vreinterpretq_f64_u64(
                vandq_u64(vceqq_f64(n, t), vreinterpretq_u64_f64(one)));
          },
          formula::ExactIndicator, mu, task_value, node_values, acc);
  }
}

}  // namespace hyperank::kernels::neon
