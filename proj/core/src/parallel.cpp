#include "picmod/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace picmod::par {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
    if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    g_threads.store(n, std::memory_order_relaxed);
}

}  // namespace picmod::par
