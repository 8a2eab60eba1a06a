#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace canonlab {

// Evaluates task(i) for i in [0, count) on up to `jobs` threads and returns
// the results in index order, so any fold over them is schedule-independent.
// The first exception thrown by a task is rethrown after all workers join.
template <class T, class Task>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Task task) {
    std::vector<T> results(count);
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace canonlab
