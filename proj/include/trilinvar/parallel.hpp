#ifndef TRILINVAR_PARALLEL_HPP
#define TRILINVAR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace trilinvar {

/// Worker count: hardware concurrency capped by the TRILINVAR_THREADS
/// environment variable (>= 1).
std::size_t worker_count();

/// Runs fn(index) for index in [0, n) on worker_count() threads.
/// fn must be safe to call concurrently for distinct indices.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace trilinvar

#endif
