#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace teg {

/// Worker count from TEG_THREADS, else the hardware concurrency.
inline unsigned default_thread_count()
{
    if (const char* env = std::getenv("TEG_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluate `fn(run)` for run = 0 .. runs-1 on up to `threads` workers.
/// Results are stored by run index, so the output does not depend on
/// scheduling. The first exception thrown by any run is rethrown.
template <typename Fn>
auto ensemble_map(std::size_t runs, unsigned threads, Fn fn) -> std::vector<std::invoke_result_t<Fn, std::size_t>>
{
    using Result = std::invoke_result_t<Fn, std::size_t>;
    std::vector<Result> results(runs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t run = next.fetch_add(1);
            if (run >= runs) return;
            try {
                results[run] = fn(run);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(runs);
                return;
            }
        }
    };

    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), runs));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace teg
