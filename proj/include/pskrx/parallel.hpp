#pragma once

#include <cstddef>
#include <functional>

namespace pskrx {

/// Runs fn(0) .. fn(count - 1) across a pool of std::threads sized to the
/// hardware (or thread_count if nonzero). Nested calls execute inline on the
/// calling thread, so parallel regions never oversubscribe each other. The
/// first exception thrown by any index is rethrown on the caller after all
/// workers join. Callers are responsible for making fn(i) independent;
/// results must be written to per-index slots so the outcome does not depend
/// on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned thread_count = 0);

}  // namespace pskrx
