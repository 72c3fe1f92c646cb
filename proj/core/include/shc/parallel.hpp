#pragma once

#include <cstddef>
#include <functional>

namespace shc {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index
/// runs exactly once; callers write results into per-index slots and reduce
/// them in index order afterwards, so results never depend on scheduling.
/// The first exception thrown by any body is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace shc
