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

#ifndef HYPERANK_PARALLEL_HPP_
#define HYPERANK_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace hyperank {

// Worker count: `requested` when non-zero, else HYPERANK_THREADS when set and
// non-zero, else the hardware concurrency. Never less than 1.
std::size_t ResolveThreads(std::size_t requested = 0);

// Runs body(begin, end) over contiguous chunks of [0, n). Chunks never
// overlap, so callers writing only out[begin..end) get results that do not
// depend on the thread count.
void ParallelFor(std::size_t n, std::size_t threads, std::size_t min_chunk,
                 const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hyperank

#endif  // HYPERANK_PARALLEL_HPP_
