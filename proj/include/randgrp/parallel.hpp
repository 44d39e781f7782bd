#pragma once

#include <cstddef>
#include <functional>

namespace randgrp {

// Worker count: RANDGRP_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned thread_count();

// Calls fn(i) for every i in [0, n) on up to thread_count() threads.  Tasks
// must write only to their own slots; the first exception is rethrown.
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& fn);

}  // namespace randgrp
