#pragma once

#include <cstddef>
#include <functional>

namespace strata {

// Number of worker threads to use; values <= 0 mean "all hardware threads".
int resolve_threads(int requested);

// Runs fn(i) for i in [0, n) on up to `threads` threads. The first exception
// thrown by any task is rethrown on the calling thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace strata
