#ifndef FRACSPLINE_PARALLEL_HPP
#define FRACSPLINE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fracspline {

/// Worker count: FRACSPLINE_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_limit();

/// Runs body(i) for i in [0, count) on up to thread_limit() threads in
/// contiguous chunks. Each index must write only its own output slot, so
/// results do not depend on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace fracspline

#endif
