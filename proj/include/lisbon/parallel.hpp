#pragma once

#include <cstddef>
#include <functional>

namespace lisbon {

// Worker cap: LISBON_THREADS when set (>= 1), else hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n). Items must be independent and must write their
// results by index, so output order never depends on scheduling. The first
// exception thrown by an item is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lisbon
