#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace lfc::detail {

// Static chunking over [0, n): every index is computed independently and
// written to its own slot, so the result is identical for any thread count.
template <class F>
inline void parallel_for(std::size_t n, F&& body) {
    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
    if (workers <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace lfc::detail
