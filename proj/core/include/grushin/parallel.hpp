#pragma once

#include <cstddef>
#include <functional>

namespace grushin {

// Worker count: explicit override if set, otherwise GRUSHIN_THREADS (0 = auto).
unsigned thread_count();
void set_thread_count(unsigned n);

// Runs fn(i) for i in [0, n), split into contiguous blocks. Each index is
// visited exactly once; callers write to disjoint slots so results do not
// depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace grushin
