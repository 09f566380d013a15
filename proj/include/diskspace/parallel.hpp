#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace diskspace {

// Worker count: DISKSPACE_THREADS caps parallelism; unset or <=1 means
// sequential execution.
inline int max_threads() {
    if (const char* env = std::getenv("DISKSPACE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

// Evaluates fn(i) for i in [0, n) and stores each result in its slot, so
// downstream reductions run in index order and outputs are bit-identical
// no matter how many threads ran.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    int workers = max_threads();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers)) {
                out[i] = fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

} // namespace diskspace
