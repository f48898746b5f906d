#pragma once

#include <cstddef>
#include <functional>

namespace cmdegen {

// Worker count: CM_DEGEN_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, count). Indices are handed out dynamically; the
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cmdegen
