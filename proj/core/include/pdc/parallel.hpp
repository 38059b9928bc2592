#pragma once

#include <functional>

namespace pdc {

// Worker count: PDC_THREADS environment variable when set and positive,
// otherwise hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) across thread_count() threads. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace pdc
