#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace pqca {

/// Splits [0, n) into at most `workers` contiguous chunks, evaluates
/// chunk(begin, end) -> T for each (concurrently when workers > 1), then folds the
/// partial results left to right with merge(T&, T&&). The fold order is fixed, so
/// the result does not depend on scheduling.
template <class T, class Chunk, class Merge>
T parallel_reduce(std::uint64_t n, unsigned workers, T init, Chunk chunk, Merge merge) {
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2 * workers) {
        merge(init, chunk(std::uint64_t{0}, n));
        return init;
    }
    std::vector<T> partial(workers, init);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t step = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(n, w * step);
        const std::uint64_t end = std::min(n, begin + step);
        threads.emplace_back([&, w, begin, end] { partial[w] = chunk(begin, end); });
    }
    for (auto &th : threads)
        th.join();
    for (auto &part : partial)
        merge(init, std::move(part));
    return init;
}

} // namespace pqca
