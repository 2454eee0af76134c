#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace pdc {

/// FNV-1a 64-bit hash, used for output-file content checksums.
std::uint64_t fnv1a64(std::string_view bytes);

/// Run fn(i) for i in [0, n) on `threads` worker threads using a static
/// block partition. Each index is processed exactly once and results must
/// be written to per-index slots, which keeps the output independent of
/// the thread count. threads <= 1 runs inline; threads == 0 picks the
/// hardware concurrency.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

/// Number of workers parallel_for would actually use.
unsigned effective_threads(unsigned requested);

} // namespace pdc
