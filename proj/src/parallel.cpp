#include "specround/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace specround {

namespace {
thread_local bool in_parallel_region = false;
}

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("SPECROUND_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    return hw;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    int workers = thread_budget();
    if (workers > count) workers = count;

    if (workers <= 1 || in_parallel_region) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        in_parallel_region = true;
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
        in_parallel_region = false;
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers - 1));
    for (int t = 1; t < workers; ++t) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace specround
