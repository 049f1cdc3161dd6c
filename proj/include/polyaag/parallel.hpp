#ifndef POLYAAG_PARALLEL_HPP
#define POLYAAG_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polyaag {

// Runs fn(0..count-1) across `workers` threads over an atomic work queue.
// workers <= 1 is a plain sequential loop and defines the reference behavior;
// results must be written by index so worker count never changes the output.
// The first exception thrown by any task is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t thread_count =
        std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) {
        threads.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Index-aligned map: result[i] = fn(i) regardless of worker count.
template <typename Out, typename Fn>
std::vector<Out> parallel_map(std::size_t count, int workers, Fn&& fn) {
    std::vector<Out> results(count);
    parallel_for(count, workers, [&](std::size_t i) { results[i] = fn(i); });
    return results;
}

}  // namespace polyaag

#endif
