#pragma once

#include <cstddef>
#include <functional>

namespace nichols {

/// Worker count: hardware concurrency, capped by NICHOLS_THREADS if set.
std::size_t worker_count();

/// Runs body(k) for k in [0, n) on up to worker_count() threads. The exception
/// from the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nichols
