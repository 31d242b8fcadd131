#ifndef KAPPATREE_PARALLEL_HPP
#define KAPPATREE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace kappatree {

/// Worker count: KAPPATREE_THREADS when set to a positive integer, otherwise hardware concurrency.
inline std::size_t worker_count() {
    if (const char* env = std::getenv("KAPPATREE_THREADS")) {
        try {
            const long requested = std::stol(env);
            if (requested > 0) {
                return static_cast<std::size_t>(requested);
            }
        } catch (const std::exception&) {
            // fall through to auto
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n). Each index is visited exactly once; fn must only write to
/// per-index state.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                fn(i);
            }
        });
    }
}

}  // namespace kappatree

#endif  // KAPPATREE_PARALLEL_HPP
