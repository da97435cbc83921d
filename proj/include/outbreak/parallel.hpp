#pragma once

#include <cstddef>
#include <functional>

namespace outbreak {

/// Number of workers to use when the caller does not say.
std::size_t default_thread_count() noexcept;

/// Runs body(i) for every i in [0, count) on up to `threads` workers.
/// Each index is visited exactly once; callers write results into
/// index-addressed slots so the outcome never depends on scheduling.
/// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace outbreak
