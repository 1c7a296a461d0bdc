#pragma once

// Basis-tuple loops in the verifiers are independent; HOPF_THREADS caps the
// worker count (unset or 1 keeps everything on the calling thread, which is
// also the fallback for tiny ranges).

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hopfcross {

inline unsigned hopf_threads() {
    if (const char* env = std::getenv("HOPF_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = hopf_threads();
    if (workers <= 1 || n < 64) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = (unsigned)n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace hopfcross
