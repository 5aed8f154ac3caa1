#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eulerpoly {

/// Worker count for internal parallelism: EULERPOLY_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
std::size_t thread_count();

/// Calls task(i) for every i in [0, count) on up to thread_count() workers.
/// The first exception thrown by any task is rethrown on the caller.
template <class Task>
void parallel_for(std::size_t count, Task&& task)
{
    const std::size_t workers = std::min(count, thread_count());
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                    try {
                        task(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
    }
    if (error) std::rethrow_exception(error);
}

} // namespace eulerpoly
