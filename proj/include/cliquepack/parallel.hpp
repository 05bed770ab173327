#ifndef CLIQUEPACK_PARALLEL_HPP
#define CLIQUEPACK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cliquepack {

// Run fn(i) for i in [0, count) on the given number of threads. Callers keep
// results in per-index slots, so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<std::size_t>(threads, count);
    pool.reserve(nthreads > 0 ? nthreads - 1 : 0);
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

inline int default_thread_count() {
    if (const char* env = std::getenv("CLIQUEPACK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace cliquepack

#endif
