#pragma once

#include <cstdint>
#include <functional>

namespace caf {

// Worker count: hardware concurrency capped by the CAF_THREADS environment
// variable (read once). 1 disables the pool entirely.
int worker_count();

// Runs fn(begin, end) over [0, n) split into fixed blocks of `grain`
// elements. Block boundaries depend only on (n, grain), never on the thread
// count, so callers that reduce per-block partials in block order get
// results independent of scheduling.
void parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace caf
