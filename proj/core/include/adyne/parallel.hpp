#pragma once

#include <cstdint>
#include <functional>

namespace adyne {

/// Run fn(i) for i in [0, n) on up to `threads` workers (0 = hardware pick).
/// Work items must be independent; callers own any result buffers, indexed by
/// i, and reduce them in index order afterwards so output never depends on
/// the worker count.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn);

}  // namespace adyne
