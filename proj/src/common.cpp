#include "condorcet/common.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace condorcet {

std::size_t default_guard() {
    if (const char* env = std::getenv("CONDORCET_LAB_GUARD")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_chunks(std::size_t count, unsigned jobs,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& work) {
    if (count == 0) return;
    if (jobs == 0) jobs = 1;
    const std::size_t chunks = std::min<std::size_t>(jobs, count);
    if (chunks == 1) {
        work(0, 0, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    const std::size_t step = count / chunks;
    const std::size_t rem = count % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t len = step + (c < rem ? 1 : 0);
        threads.emplace_back(work, c, begin, begin + len);
        begin += len;
    }
    for (auto& t : threads) t.join();
}

}  // namespace condorcet
