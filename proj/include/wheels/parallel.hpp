#ifndef WHEELS_PARALLEL_HPP
#define WHEELS_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace wheels {

// Worker count for scan splitting. CENSUS_THREADS caps it when set; the
// split never changes output bytes, only wall time.
int worker_count();

// Runs fn(chunk_index, lo, hi) over a partition of [begin, end) into
// `chunks` contiguous ranges, one thread per chunk. fn must only touch
// chunk-local state.
template <typename Fn>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, int chunks, Fn&& fn) {
    const std::uint64_t total = end - begin;
    if (chunks <= 1 || total < 2) {
        fn(0, begin, end);
        return;
    }
    auto n = static_cast<std::uint64_t>(chunks);
    if (n > total) n = total;
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c) {
        std::uint64_t lo = begin + total / n * c + std::min(c, total % n);
        std::uint64_t hi = lo + total / n + (c < total % n ? 1 : 0);
        threads.emplace_back([&fn, c, lo, hi] { fn(static_cast<int>(c), lo, hi); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace wheels

#endif  // WHEELS_PARALLEL_HPP
