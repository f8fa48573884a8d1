// parallel.hpp -- chunked parallel reduction over an index range.
// Integer reductions only, so results are independent of the split.

#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace ufmvt {

// Worker count: explicit setting wins, then UFMVT_THREADS, then hardware.
unsigned worker_count();
void set_worker_count(unsigned n);  // 0 = auto

// Sums body(i) for i in [lo, hi).  body must be pure.
template <typename Body>
std::uint64_t parallel_sum(std::uint64_t lo, std::uint64_t hi, Body body) {
    unsigned workers = worker_count();
    if (workers <= 1 || hi - lo < 1024) {
        std::uint64_t total = 0;
        for (std::uint64_t i = lo; i < hi; ++i) total += body(i);
        return total;
    }
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    std::uint64_t span = hi - lo;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = lo + span * w / workers;
        std::uint64_t e = lo + span * (w + 1) / workers;
        threads.emplace_back([&, w, b, e] {
            std::uint64_t t = 0;
            for (std::uint64_t i = b; i < e; ++i) t += body(i);
            partial[w] = t;
        });
    }
    for (auto& t : threads) t.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

}  // namespace ufmvt
