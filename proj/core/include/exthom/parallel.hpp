#ifndef EXTHOM_PARALLEL_HPP
#define EXTHOM_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace exthom {

/// Applies fn to every item, possibly on several threads, and returns the
/// results in input order — output never depends on the worker count. The
/// first exception thrown by fn is rethrown after all workers stop.
template <typename Out, typename In, typename Fn>
std::vector<Out> parallel_map(const std::vector<In>& items, int workers, Fn fn) {
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    if (workers < 1) workers = 1;
    const int usable = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), items.size()));
    if (usable == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(usable));
    for (int w = 0; w < usable; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    results[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(items.size());
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace exthom

#endif
