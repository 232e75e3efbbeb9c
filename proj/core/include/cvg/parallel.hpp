#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cvg {

/* Number of worker threads to use: explicit request > CVG_THREADS env > hardware. */
inline int effective_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CVG_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/* Runs fn(batch_index) for batch_index in [0, nbatches) across a fixed-size
   thread pool.  Each batch derives its own random stream from its index, and
   callers accumulate per-batch results by index, so the outcome is identical
   for any thread count. */
template <class F>
void parallel_batches(int nbatches, F&& fn, int threads = 0) {
    int nt = std::min(effective_threads(threads), nbatches > 0 ? nbatches : 1);
    if (nt <= 1) {
        for (int b = 0; b < nbatches; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int w = 0; w < nt; ++w) {
        pool.emplace_back([&fn, w, nt, nbatches]() {
            for (int b = w; b < nbatches; b += nt) fn(b);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cvg
