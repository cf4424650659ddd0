#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weyllab {

inline int default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Calls f(i) for i in [0, n) on up to `threads` workers, interleaved by index.
/// Results must be written to per-index slots; the first exception is rethrown.
template <class F>
void parallel_for(int n, int threads, F&& f) {
    threads = std::clamp(threads, 1, std::max(1, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += threads) f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace weyllab
