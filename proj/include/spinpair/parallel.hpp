#pragma once

#include <cstddef>
#include <functional>

namespace spinpair {

/// Worker count: `requested` if positive, else SPINPAIR_THREADS, else the
/// hardware concurrency.
int resolve_threads(int requested);

/// Calls body(i) for i in [0, n) on up to `threads` workers. Each index runs
/// exactly once. If any call throws, the exception from the lowest failing
/// index is rethrown after all workers stop, so failures are reported the
/// same way regardless of scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace spinpair
