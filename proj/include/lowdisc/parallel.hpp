#pragma once

#include <cstddef>
#include <functional>

namespace lowdisc {

// Worker count for the row-parallel loops. Defaults to the LOWDISC_THREADS
// environment variable, or 1 when unset. Results are bitwise independent of
// the value: workers only fill disjoint per-row slots and the reduction that
// follows is sequential.
int num_threads();
void set_num_threads(int t);

// Runs fn(i) for i in [0, n). Splits into contiguous chunks, one per worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lowdisc
