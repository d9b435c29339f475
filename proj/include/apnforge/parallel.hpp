#pragma once

#include <cstddef>
#include <functional>

namespace apnforge {

/// Worker count used when a caller passes 0.
unsigned default_workers();

/// Splits [begin, end) into at most `workers` contiguous ranges and runs
/// body(lo, hi) on each, the first range on the calling thread. Exceptions
/// thrown by any range are rethrown after all ranges finish.
void parallel_for(std::size_t begin, std::size_t end, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace apnforge
