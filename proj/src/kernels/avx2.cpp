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

// Compiled with -mavx2 only; reached through runtime dispatch.

#include <immintrin.h>

#include <cmath>

#include "hyperank/kernels.hpp"

namespace hyperank::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// std::min(n, t) is (t < n) ? t : n, and std::max(n, t) is (n < t) ? t : n.
// Blends reproduce those exactly, including which operand wins a tie.
inline __m256d StdMin(__m256d n, __m256d t) {
  return _mm256_blendv_pd(n, t, _mm256_cmp_pd(t, n, _CMP_LT_OQ));
}
inline __m256d StdMax(__m256d n, __m256d t) {
  return _mm256_blendv_pd(n, t, _mm256_cmp_pd(n, t, _CMP_LT_OQ));
}

template <typename Lane, typename Tail>
void Run(Lane lane, Tail tail, double mu, double t,
         std::span<const double> x, std::span<double> acc) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % kLanes;
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vt = _mm256_set1_pd(t);
  for (std::size_t i = 0; i < body; i += kLanes) {
    const __m256d f = lane(_mm256_loadu_pd(x.data() + i), vt);
    const __m256d a = _mm256_loadu_pd(acc.data() + i);
    _mm256_storeu_pd(acc.data() + i, _mm256_add_pd(a, _mm256_mul_pd(vmu, f)));
  }
  for (std::size_t i = body; i < n; ++i) acc[i] = acc[i] + mu * tail(x[i], t);
}

}  // namespace

void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d sign = _mm256_set1_pd(-0.0);
  switch (kind) {
    case MatchKind::kRatioMinMax:
      return Run(
          [](__m256d n, __m256d t) {
            return _mm256_div_pd(StdMin(n, t), StdMax(n, t));
          },
          formula::RatioMinMax, mu, task_value, node_values, acc);
    case MatchKind::kSaturatingRatio:
      return Run(
          [one](__m256d n, __m256d t) {
            return _mm256_blendv_pd(_mm256_div_pd(n, t), one,
                                    _mm256_cmp_pd(n, t, _CMP_GE_OQ));
          },
          formula::SaturatingRatio, mu, task_value, node_values, acc);
    case MatchKind::kLogRatio:
      // No vector log in AVX2; the min/max select is vectorized and the two
      // logarithms go through libm per lane so results match the scalar path.
      return Run(
          [one](__m256d n, __m256d t) {
            alignas(32) double lo[kLanes];
            alignas(32) double hi[kLanes];
            _mm256_store_pd(lo, _mm256_add_pd(one, StdMin(n, t)));
            _mm256_store_pd(hi, _mm256_add_pd(one, StdMax(n, t)));
            for (std::size_t j = 0; j < kLanes; ++j) {
              lo[j] = std::log(lo[j]) / std::log(hi[j]);
            }
            return _mm256_load_pd(lo);
          },
          formula::LogRatio, mu, task_value, node_values, acc);
    case MatchKind::kBandwidthShift: {
      const double shifted = task_value + 1;
      return Run(
          [shifted](__m256d n, __m256d) {
            return _mm256_div_pd(n, _mm256_set1_pd(shifted));
          },
          formula::BandwidthShift, mu, task_value, node_values, acc);
    }
    case MatchKind::kLatencyInverse:
      return Run(
          [one](__m256d n, __m256d t) {
            return _mm256_div_pd(one, _mm256_add_pd(one, _mm256_div_pd(n, t)));
          },
          formula::LatencyInverse, mu, task_value, node_values, acc);
    case MatchKind::kAbsDiff:
      return Run(
          [sign](__m256d n, __m256d t) {
            const __m256d magnitude = _mm256_andnot_pd(sign, _mm256_sub_pd(n, t));
            return _mm256_xor_pd(magnitude, sign);
          },
          formula::NegAbsDiff, mu, task_value, node_values, acc);
    case MatchKind::kExactIndicator:
      return Run(
          [one](__m256d n, __m256d t) {
            return _mm256_and_pd(_mm256_cmp_pd(n, t, _CMP_EQ_OQ), one);
          },
          formula::ExactIndicator, mu, task_value, node_values, acc);
  }
}

}  // namespace hyperank::kernels::avx2
