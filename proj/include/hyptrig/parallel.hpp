#pragma once

#include <functional>

namespace hyptrig {

/// Number of workers: hardware concurrency capped by the HYPTRIG_THREADS
/// environment variable (always at least 1).
int worker_count();

/// Runs fn(i) for i in [0, n). Work is distributed over worker_count()
/// threads (or `workers` when positive); callers make determinism trivial by
/// writing to disjoint slots.
void parallel_for(long long n, const std::function<void(long long)>& fn, int workers = 0);

}  // namespace hyptrig
