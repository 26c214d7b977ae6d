#pragma once

#include <cstddef>
#include <functional>

namespace nsde {

/// Process-wide cap on worker threads (default: hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs fn(i) for i in [0, n) across worker threads, chunked by index range.
/// Callers must write results into per-index slots; any reduction is done by
/// the caller afterwards in index order, so results never depend on the
/// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace nsde
