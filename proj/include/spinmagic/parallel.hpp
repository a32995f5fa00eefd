// Copyright 2026 The spinmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace spinmagic {

/// Default worker count: SPINMAGIC_THREADS if set, else hardware
/// concurrency.
int default_thread_count();

/// Overrides the default (0 restores the environment/hardware value).
void set_default_thread_count(int threads);

/// Number of chunks parallel_for_chunks will use for a given range.
/// Depends only on `total`, never on the thread count, so per-chunk
/// partials combined in chunk order reduce to bit-identical results at
/// any thread count.
int chunk_count(std::int64_t total);

/// Runs fn(chunk_index, begin, end) over a static partition of
/// [0, total) into chunk_count(total) contiguous ranges, distributed
/// over `threads` workers.
void parallel_for_chunks(
    std::int64_t total, int threads,
    const std::function<void(int, std::int64_t, std::int64_t)>& fn);

}  // namespace spinmagic
