#pragma once

#include <cstddef>
#include <functional>

namespace su11 {

/// Worker count: SU11_THREADS when set to a positive value, otherwise the
/// hardware concurrency (SU11_THREADS=0 also means auto).
unsigned thread_count();

/// Runs fn(i) for i in [0, n) across thread_count() workers on disjoint
/// index blocks. fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace su11
