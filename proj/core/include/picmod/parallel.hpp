#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace picmod::par {

// Worker cap shared by all enumeration routines.  Results never depend on it:
// work is split into contiguous index ranges and gathered in index order, so
// output is byte-identical for any thread count.
int thread_count();
void set_thread_count(int n);  // n <= 0 selects the hardware count

// Runs fn(i) for i in [0, n) and concatenates the produced chunks in index
// order.
template <class R>
std::vector<R> map_indexed(std::int64_t n,
                           const std::function<std::vector<R>(std::int64_t)>& fn) {
    std::vector<R> out;
    const int workers = std::min<std::int64_t>(thread_count(), n > 0 ? n : 1);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) {
            auto part = fn(i);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    std::vector<std::vector<R>> per_index(static_cast<std::size_t>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = n * w / workers;
        const std::int64_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            for (std::int64_t i = lo; i < hi; ++i)
                per_index[static_cast<std::size_t>(i)] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& part : per_index)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

}  // namespace picmod::par
