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

#ifndef HYPERANK_RNG_HPP_
#define HYPERANK_RNG_HPP_

// SplitMix64 (Steele, Lea, Flood 2014). Used both as a sequential generator
// and, through Mix, as a counter-based hash that derives independent streams
// from (seed, a, b) without any shared state.

#include <cstdint>

namespace hyperank {

constexpr std::uint64_t SplitMix64Step(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Stream key for (seed, a, b).
constexpr std::uint64_t Mix(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b = 0) {
  return SplitMix64Step(SplitMix64Step(seed + kGolden * (a + 1)) +
                        kGolden * (b + 1));
}

// 53 high bits mapped to [0, 1).
constexpr double ToUnit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += kGolden;
    return SplitMix64Step(state_);
  }

  double NextUnit() { return ToUnit(Next()); }

  // Uniform integer in [0, bound) by rejection, bound > 0.
  std::uint64_t NextBelow(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = Next();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      if (static_cast<std::uint64_t>(m) >= limit) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperank

#endif  // HYPERANK_RNG_HPP_
