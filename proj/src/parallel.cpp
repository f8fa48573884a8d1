#include "ufmvt/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace ufmvt {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_worker_count(unsigned n) { g_workers.store(n); }

unsigned worker_count() {
    unsigned n = g_workers.load();
    if (n > 0) return n;
    if (const char* env = std::getenv("UFMVT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace ufmvt
