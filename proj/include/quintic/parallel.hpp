#ifndef QUINTIC_PARALLEL_HPP
#define QUINTIC_PARALLEL_HPP

/**
 * @file parallel.hpp
 * @brief Deterministic index-parallel loops.
 *
 * Worker count comes from the QUINTIC_THREADS environment variable (default:
 * hardware concurrency).  Each loop body owns its index exclusively, so
 * results are identical for any worker count - parallelism only reorders
 * wall-clock execution, never arithmetic.
 */

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quintic {

inline int worker_count() {
    if (const char* env = std::getenv("QUINTIC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename F>
void parallel_for(int n, F&& body) {
    if (n <= 0) return;
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (int i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace quintic

#endif
