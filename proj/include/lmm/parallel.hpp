#pragma once

#include <functional>

namespace lmm {

/// Worker count used by the pixel-parallel kernels. 0 selects the hardware
/// concurrency. Results never depend on this value.
void set_thread_count(int n);
int thread_count();

/// Splits [0, rows) into contiguous bands and calls body(begin, end) for each
/// band, possibly concurrently. Exceptions from workers are rethrown.
void parallel_rows(int rows, const std::function<void(int, int)>& body);

}  // namespace lmm
