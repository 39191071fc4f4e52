#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace qhw {

inline unsigned& parallel_jobs() {
    static unsigned jobs = 1;
    return jobs;
}

inline void set_parallel_jobs(unsigned jobs) { parallel_jobs() = std::max(1u, jobs); }

/// Runs fn(i) for i in [0, count). Each index is processed exactly once;
/// callers keep determinism by writing results into slot i and combining in
/// index order afterwards.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned jobs = std::min<std::size_t>(parallel_jobs(), count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace qhw
