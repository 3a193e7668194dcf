#pragma once

#include <cstddef>
#include <functional>

namespace msurf {

// METASURF_THREADS if set and positive, else the number of logical cores.
unsigned worker_count();

// Runs body(i) for i in [0, n). Indices are sharded in contiguous blocks so
// results written by index are independent of scheduling. The first
// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0);

} // namespace msurf
