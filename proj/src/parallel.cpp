#include "lowdisc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lowdisc {

static int env_threads() {
    const char* s = std::getenv("LOWDISC_THREADS");
    if (!s) return 1;
    int t = std::atoi(s);
    return t > 0 ? t : 1;
}

static std::atomic<int> g_threads{0};  // 0 = not yet initialized

int num_threads() {
    int t = g_threads.load(std::memory_order_relaxed);
    if (t == 0) {
        t = env_threads();
        g_threads.store(t, std::memory_order_relaxed);
    }
    return t;
}

void set_num_threads(int t) { g_threads.store(t > 0 ? t : 1, std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int t = num_threads();
    if (t <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(t, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lowdisc
