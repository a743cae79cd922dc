#include "sblab/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sblab {

namespace {
unsigned long env_ulong(const char* name, unsigned long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoul(v);
    } catch (const std::exception&) {
        return fallback;
    }
}
}  // namespace

std::size_t max_slice_cols() { return env_ulong("SBLAB_MAX_SLICE_COLS", 50000); }

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(env_ulong("SBLAB_WORKERS", std::min(hw, 8u)));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(workers, count);
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sblab
