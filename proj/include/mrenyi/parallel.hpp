#pragma once

#include <functional>

namespace mrenyi {

// Effective worker count: `requested` if positive, else the MRENYI_THREADS
// environment variable, else hardware concurrency.
int thread_count(int requested = 0);

// Runs fn(i) for i in [begin, end). Work items must be independent; results
// are typically written to per-index slots so the outcome does not depend on
// scheduling order.
void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn);

} // namespace mrenyi
