#pragma once

#include <cstddef>
#include <functional>

namespace binomoment {

/// Number of worker threads: hardware concurrency, capped by the
/// BINOMOMENT_THREADS environment variable when it is set to a positive
/// integer. Always at least 1.
std::size_t worker_count();

/// Calls body(i) for every i in [0, count), spread over worker_count()
/// threads in contiguous chunks. The first exception thrown by any call is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Sum in a fixed pairwise tree, independent of how values were produced.
double pairwise_sum(const double* values, std::size_t count);

}  // namespace binomoment
