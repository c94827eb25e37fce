#ifndef SHIFTLAB_PARALLEL_HPP
#define SHIFTLAB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace shiftlab {

/// Worker cap: SHIFTLAB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(k) for every k in [0, count), spread over up to worker_count()
/// threads.  Iterations must be independent; exceptions are rethrown on the
/// calling thread (the first one captured wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace shiftlab

#endif  // SHIFTLAB_PARALLEL_HPP
