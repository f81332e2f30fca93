#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pp::detail {

// Runs `worker` over partitions [skip, count) on `jobs` threads and hands
// each result to `emit` in partition order, so output never depends on
// scheduling. `emit` returning false stops the run.
template <typename Result>
void run_partitions_ordered(uint32_t count, uint32_t skip, uint32_t jobs,
                            const std::function<Result(uint32_t)>& worker,
                            const std::function<bool(uint32_t, Result&)>& emit) {
    if (skip >= count) return;
    if (jobs <= 1) {
        for (uint32_t i = skip; i < count; ++i) {
            Result r = worker(i);
            if (!emit(i, r)) return;
        }
        return;
    }

    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<Result>> slots(count - skip);
    std::atomic<uint32_t> next{skip};
    std::atomic<bool> stop{false};

    auto body = [&] {
        for (;;) {
            uint32_t i = next.fetch_add(1);
            if (i >= count || stop.load()) return;
            Result r = worker(i);
            {
                std::lock_guard lock(mu);
                slots[i - skip] = std::move(r);
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (uint32_t t = 0; t < jobs; ++t) pool.emplace_back(body);

    for (uint32_t i = skip; i < count && !stop.load(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[i - skip].has_value(); });
        Result r = std::move(*slots[i - skip]);
        slots[i - skip].reset();
        lock.unlock();
        if (!emit(i, r)) stop.store(true);
    }
    for (auto& t : pool) t.join();
}

}  // namespace pp::detail
