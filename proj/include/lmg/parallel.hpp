#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lmg {

// Applies `task` to every index in [0, n) over a worker pool and returns the
// results in index order, so the output is identical to a sequential run no
// matter how work interleaves. The first task failure wins and is rethrown
// after all workers have stopped; tasks are expected to embed their grid
// coordinates in the exception message.
template <typename Result>
std::vector<Result> parallel_map(int n, int workers,
                                 const std::function<Result(int)>& task) {
    std::vector<Result> results(n);
    if (n == 0) return results;

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = std::min(workers, n);

    if (workers == 1) {
        for (int i = 0; i < n; ++i) results[i] = task(i);
        return results;
    }

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) break;
            try {
                results[i] = task(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace lmg
