// Deterministic parallel reductions.
//
// All sums in this library go through pairwise (tree) reduction over a chunk
// grid whose geometry depends only on the problem size, never on the thread
// count.  Chunks are claimed dynamically by worker threads but results are
// stored by chunk index and combined in a fixed order, so every reduction is
// bit-identical at 1, 4, or 8 threads.

#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

namespace ppc::par {

// Global worker count, set once by the CLI (--threads) or left at hardware
// parallelism.  0 is treated as 1.
int thread_count();
void set_thread_count(int n);

namespace detail {

// Serial pairwise sum of f(i) over [lo, hi).  Leaf runs of <= 64 terms are
// accumulated left to right; longer ranges split at the midpoint.
template <class T, class F>
T pairwise_sum(std::int64_t lo, std::int64_t hi, F&& f) {
    if (hi - lo <= 64) {
        T s{};
        for (std::int64_t i = lo; i < hi; ++i) s += f(i);
        return s;
    }
    std::int64_t mid = lo + (hi - lo) / 2;
    T a = pairwise_sum<T>(lo, mid, f);
    T b = pairwise_sum<T>(mid, hi, f);
    return a + b;
}

template <class T>
T pairwise_combine(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    T a = pairwise_combine(v, lo, mid);
    T b = pairwise_combine(v, mid, hi);
    return a + b;
}

}  // namespace detail

inline constexpr std::int64_t kChunk = 4096;

// Runs fn(chunk_index, chunk_lo, chunk_hi) for every chunk of [0, n).
// Chunk boundaries depend only on n.
template <class F>
void for_chunks(std::int64_t n, F&& fn) {
    if (n <= 0) return;
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    int workers = thread_count();
    if (workers <= 1 || nchunks == 1) {
        for (std::int64_t c = 0; c < nchunks; ++c)
            fn(c, c * kChunk, std::min(n, (c + 1) * kChunk));
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto body = [&] {
        for (;;) {
            std::int64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c, c * kChunk, std::min(n, (c + 1) * kChunk));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

// Deterministic sum of f(i) over [0, n): pairwise inside each chunk, then a
// pairwise combine over the chunk results in index order.
template <class T, class F>
T sum(std::int64_t n, F&& f) {
    if (n <= 0) return T{};
    const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<T> partial(static_cast<std::size_t>(nchunks));
    for_chunks(n, [&](std::int64_t c, std::int64_t lo, std::int64_t hi) {
        partial[static_cast<std::size_t>(c)] = detail::pairwise_sum<T>(lo, hi, f);
    });
    return detail::pairwise_combine(partial, 0, partial.size());
}

}  // namespace ppc::par
