#include "theta/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace theta {

namespace {

int default_cap() {
    if (const char* env = std::getenv("THETA_EXTREMAL_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{default_cap()};
    return cap;
}

}  // namespace

int thread_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_thread_cap(int threads) { cap_storage().store(threads < 1 ? 1 : threads); }

}  // namespace theta
