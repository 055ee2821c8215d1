#pragma once

#include <cstddef>
#include <functional>

namespace qbcap {

/// Runs fn(i) for i in [0, count) across worker threads (hardware concurrency
/// when threads == 0). Contiguous index ranges per worker; the first exception
/// thrown by any worker is rethrown after all join. Callers own any ordering
/// guarantees: write results by index, never append.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace qbcap
