#pragma once

#include <functional>

namespace specround {

/// Thread budget: SPECROUND_THREADS if set (0 means "auto"), otherwise
/// the hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [0, count). Iterations may execute on worker
/// threads; results must be written to disjoint slots so the merge is
/// deterministic. Nested calls degrade to serial execution. The first
/// exception thrown by any iteration is rethrown on the caller.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace specround
