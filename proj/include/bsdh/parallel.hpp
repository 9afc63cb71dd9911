#ifndef BSDH_PARALLEL_HPP
#define BSDH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bsdh {

// Explicit worker count set by a caller (0 = not set).
inline unsigned& worker_override()
{
    static unsigned n = 0;
    return n;
}

// Worker count: the explicit override, else BSDH_JOBS, else the hardware concurrency.
inline unsigned worker_count()
{
    if (worker_override() > 0)
        return worker_override();
    if (const char* env = std::getenv("BSDH_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(k) for k in [0, n); the first exception is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
    unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k)
            body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next++) < n;) {
                try {
                    body(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace bsdh

#endif
