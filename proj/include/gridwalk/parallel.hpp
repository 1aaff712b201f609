#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gridwalk {

/// 0 or negative -> hardware concurrency (at least 1).
inline int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(0..block_count-1), pulling block indices from a shared counter.
/// Callers get determinism by making blocks independent and reducing their
/// outputs in block order afterwards. The first exception wins and rethrows
/// after all workers join.
inline void parallel_for_blocks(int block_count, int threads,
                                const std::function<void(int)>& fn) {
    threads = std::min(resolve_threads(threads), block_count);
    if (threads <= 1) {
        for (int b = 0; b < block_count; ++b) {
            fn(b);
        }
        return;
    }

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const int b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= block_count) {
                return;
            }
            try {
                fn(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace gridwalk
