#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace monlef {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent arithmetic overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent arithmetic overflow");
    return r;
}

/// Runs fn(0), ..., fn(count-1) on up to `threads` workers (0 = hardware
/// default). Exceptions are captured and the first one rethrown after join.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t want = threads > 0 ? (std::size_t)threads : (hw ? hw : 1);
    if (want > count)
        want = count;
    if (want <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(want);
    for (std::size_t t = 0; t < want; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace monlef
