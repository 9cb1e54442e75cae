#include "lmm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lmm {
namespace {

std::atomic<int> g_threads{0};

}  // namespace

void set_thread_count(int n) { g_threads.store(std::max(0, n)); }

int thread_count() {
    int n = g_threads.load();
    if (n == 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

void parallel_rows(int rows, const std::function<void(int, int)>& body) {
    if (rows <= 0) return;
    const int workers = std::min(thread_count(), rows);
    if (workers == 1) {
        body(0, rows);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const int band = (rows + workers - 1) / workers;
    for (int begin = 0; begin < rows; begin += band) {
        const int end = std::min(rows, begin + band);
        pool.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace lmm
