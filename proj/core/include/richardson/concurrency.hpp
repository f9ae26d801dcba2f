#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace richardson {

/// Thrown from long-running kernels once the calling thread's deadline passes.
class Timeout : public std::runtime_error {
public:
    Timeout() : std::runtime_error("case timed out") {}
};

/// Per-thread cooperative deadline. Kernels call `check_deadline()` in their
/// inner loops; the batch runner installs a deadline per case.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::chrono::steady_clock::time_point previous_;
    bool had_previous_;
};

void check_deadline();

/// Get-or-compute map. Concurrent callers asking for the same key block on a
/// single computation; a computation that throws is not cached.
template <class Key, class Value>
class MemoMap {
public:
    template <class Compute>
    Value get_or_compute(const Key& key, Compute&& compute) {
        std::promise<Value> promise;
        std::shared_future<Value> future;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) {
                future = it->second;
            } else {
                future = promise.get_future().share();
                table_.emplace(key, future);
                owner = true;
            }
        }
        if (!owner) return future.get();
        try {
            promise.set_value(compute());
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(mutex_);
            table_.erase(key);
        }
        return future.get();
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, std::shared_future<Value>> table_;
};

/// Runs `task(i)` for i in [0, count) on up to `workers` threads. Results are
/// stored by index, so output order never depends on completion order.
template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t count, std::size_t workers, Task&& task) {
    std::vector<Result> results(count);
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) results[i] = task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace richardson
