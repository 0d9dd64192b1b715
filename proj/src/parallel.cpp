#include "ppc/parallel.hpp"

namespace ppc::par {

namespace {
std::atomic<int> g_threads{0};  // 0 = uninitialized, use hardware count
}

int thread_count() {
    int n = g_threads.load();
    if (n <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        n = hc ? static_cast<int>(hc) : 1;
    }
    return n;
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 1); }

}  // namespace ppc::par
