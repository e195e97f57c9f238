#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace mspring {

/// Evaluates f(0), ..., f(count-1) on up to `threads` workers and returns the
/// results in index order. threads <= 1 runs inline.
template <typename F>
auto parallel_map(std::size_t count, int threads, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            out[k] = f(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= count)
                return;
            try {
                out[k] = f(k);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    auto n = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(threads), count));
    for (std::size_t t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace mspring
