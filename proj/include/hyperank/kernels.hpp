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

#ifndef HYPERANK_KERNELS_HPP_
#define HYPERANK_KERNELS_HPP_

// Column kernels for batch scoring. For one metric term the kernel adds
// mu * f(node_values[i], task_value) into acc[i] for every i. Scalar is the
// reference; the SIMD variants perform the same IEEE operations in the same
// order per lane and must agree with it bit for bit.
//
// Inputs are assumed in the function's domain; callers check first.

#include <optional>
#include <span>
#include <string_view>

#include "hyperank/match.hpp"

namespace hyperank::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view ToString(Isa isa);
std::optional<Isa> ParseIsa(std::string_view name);

// True when the variant was compiled in and the running CPU supports it.
bool Available(Isa isa);

// Best available variant, unless HYPERANK_ISA names an available one.
Isa Best();

void AccumulateColumn(Isa isa, MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc);

namespace scalar {
void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc);
}  // namespace scalar

#if defined(HYPERANK_HAVE_AVX2)
namespace avx2 {
void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc);
}  // namespace avx2
#endif

#if defined(HYPERANK_HAVE_NEON)
namespace neon {
void AccumulateColumn(MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc);
}  // namespace neon
#endif

}  // namespace hyperank::kernels

#endif  // HYPERANK_KERNELS_HPP_
