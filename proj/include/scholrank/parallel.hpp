#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace scholrank {

/// Calls fn(i) for every i in [0, n), split into contiguous chunks over `workers` threads.
/// fn must only write state owned by index i; the result is then independent of the worker count.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    constexpr std::size_t min_chunk = 1024;
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2 * min_chunk) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, (n + min_chunk - 1) / min_chunk);
    const std::size_t step = (n + chunks - 1) / chunks;
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * step;
        const std::size_t hi = std::min(n, lo + step);
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
}

}  // namespace scholrank
