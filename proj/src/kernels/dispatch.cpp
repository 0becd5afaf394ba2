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

#include <cstdlib>

#include "hyperank/error.hpp"
#include "hyperank/kernels.hpp"

namespace hyperank::kernels {

std::string_view ToString(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "scalar";
}

std::optional<Isa> ParseIsa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  if (name == "neon") return Isa::kNeon;
  return std::nullopt;
}

bool Available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(HYPERANK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(HYPERANK_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa Best() {
  static const Isa best = [] {
    if (const char* env = std::getenv("HYPERANK_ISA"); env && *env) {
      if (auto forced = ParseIsa(env); forced && Available(*forced)) {
        return *forced;
      }
    }
    if (Available(Isa::kAvx2)) return Isa::kAvx2;
    if (Available(Isa::kNeon)) return Isa::kNeon;
    return Isa::kScalar;
  }();
  return best;
}

void AccumulateColumn(Isa isa, MatchKind kind, double mu, double task_value,
                      std::span<const double> node_values,
                      std::span<double> acc) {
  if (node_values.size() != acc.size()) {
    throw Error(ErrorKind::kUsage, "kernel column and accumulator lengths differ");
  }
  if (!Available(isa)) {
    throw Error(ErrorKind::kConfiguration,
                "kernel variant '" + std::string(ToString(isa)) +
                    "' is not available on this machine");
  }
  switch (isa) {
#if defined(HYPERANK_HAVE_AVX2)
    case Isa::kAvx2:
      return avx2::AccumulateColumn(kind, mu, task_value, node_values, acc);
#endif
#if defined(HYPERANK_HAVE_NEON)
    case Isa::kNeon:
      return neon::AccumulateColumn(kind, mu, task_value, node_values, acc);
#endif
    default:
      return scalar::AccumulateColumn(kind, mu, task_value, node_values, acc);
  }
}

}  // namespace hyperank::kernels
