#include "pdc/util.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace pdc {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
    unsigned workers = effective_threads(threads);
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = n / workers;
    const std::size_t extra = n % workers;
    std::size_t start = 0;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t len = chunk + (t < extra ? 1 : 0);
        pool.emplace_back([start, len, t, &fn, &errors] {
            try {
                for (std::size_t i = start; i < start + len; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
        start += len;
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace pdc
