#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace tcov {

struct ParallelOptions {
    int workers = 0;                      // 0 = hardware concurrency
    std::uint64_t chunk_size = 1ull << 20;

    int resolved_workers(std::uint64_t total) const {
        int w = workers > 0 ? workers : int(std::thread::hardware_concurrency());
        if (w < 1) w = 1;
        std::uint64_t chunk = std::max<std::uint64_t>(1, chunk_size);
        std::uint64_t chunks = (total + chunk - 1) / chunk;
        if (chunks > 0 && std::uint64_t(w) > chunks) w = int(chunks);
        return w;
    }
};

// Hands contiguous chunks of [0,total) to a pool of workers, each owning one
// State. Chunk assignment is dynamic, so reductions over the returned states
// must be commutative to stay independent of the worker count.
template <typename State, typename Body>
std::vector<State> for_each_chunk(std::uint64_t total, const ParallelOptions& opt, Body&& body) {
    int workers = opt.resolved_workers(total);
    std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk_size);
    std::vector<State> states(std::size_t(std::max(workers, 1)));
    if (total == 0) return states;

    if (workers == 1) {
        for (std::uint64_t lo = 0; lo < total; lo += chunk)
            body(states[0], lo, std::min(total, lo + chunk));
        return states;
    }

    std::atomic<std::uint64_t> cursor{0};
    auto run = [&](State& st) {
        for (;;) {
            std::uint64_t lo = cursor.fetch_add(chunk, std::memory_order_relaxed);
            if (lo >= total) break;
            body(st, lo, std::min(total, lo + chunk));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, std::ref(states[std::size_t(w)]));
    for (auto& t : pool) t.join();
    return states;
}

// splitmix64 finalizer; used for order-independent result digests.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace tcov
