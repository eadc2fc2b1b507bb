#include "pskrx/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pskrx {

namespace {
thread_local bool g_inside_parallel_region = false;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned thread_count) {
    if (count == 0) return;
    unsigned workers = thread_count ? thread_count : std::thread::hardware_concurrency();
    if (workers > count) workers = static_cast<unsigned>(count);
    if (g_inside_parallel_region || workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        g_inside_parallel_region = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pskrx
