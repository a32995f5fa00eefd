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

#include "spinmagic/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>

namespace spinmagic {

namespace {
constexpr int kMaxChunks = 256;
int g_override = 0;
}  // namespace

int default_thread_count() {
    if (g_override > 0) return g_override;
    if (const char* env = std::getenv("SPINMAGIC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_thread_count(int threads) { g_override = threads; }

int chunk_count(std::int64_t total) {
    if (total <= 0) return 0;
    return static_cast<int>(std::min<std::int64_t>(total, kMaxChunks));
}

void parallel_for_chunks(
    std::int64_t total, int threads,
    const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
    const int chunks = chunk_count(total);
    if (chunks == 0) return;
    auto range = [&](int c, std::int64_t& b, std::int64_t& e) {
        b = total * c / chunks;
        e = total * (c + 1) / chunks;
    };
    if (threads <= 1 || chunks == 1) {
        for (int c = 0; c < chunks; ++c) {
            std::int64_t b, e;
            range(c, b, e);
            fn(c, b, e);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= chunks) return;
            std::int64_t b, e;
            range(c, b, e);
            try {
                fn(c, b, e);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min(threads, chunks);
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace spinmagic
