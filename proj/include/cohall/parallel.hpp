#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cohall {

// Upper bound on worker threads used inside symmetrization loops and matrix
// assembly.  Results are reduced in index order, so the output is identical
// for every setting.
inline std::atomic<int>& parallel_jobs() {
    static std::atomic<int> jobs{1};
    return jobs;
}

inline void set_parallel_jobs(int n) { parallel_jobs() = n < 1 ? 1 : n; }

// Evaluates fn(0..n-1), possibly concurrently.  fn must only touch state
// owned by its own index.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    int jobs = parallel_jobs().load();
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace cohall
