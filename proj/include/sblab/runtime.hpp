#pragma once

#include <cstddef>
#include <functional>

namespace sblab {

// SBLAB_MAX_SLICE_COLS: cap on oracle slice width (default 50000).
std::size_t max_slice_cols();

// SBLAB_WORKERS: worker-pool size for independent experiment jobs
// (default: hardware concurrency clamped to 8; 0 or 1 means serial).
unsigned worker_count();

// Runs fn(0..count-1) on the worker pool. Results must go to per-index
// slots; the first exception thrown by any job is rethrown after join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace sblab
