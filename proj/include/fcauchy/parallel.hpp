#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fcauchy {

/// Worker cap: FISCHER_CAUCHY_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency().
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Each chunk is
/// processed by one thread; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace fcauchy
