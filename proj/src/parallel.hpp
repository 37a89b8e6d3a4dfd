#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace edp::detail {

// Runs fn(i) for i in [0, count), item i on worker i % threads. Callers write
// results into per-item slots, so the outcome never depends on `threads`.
template <typename Fn>
void parallel_for_interleaved(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
}

}  // namespace edp::detail
