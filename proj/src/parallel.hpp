#ifndef VARFRAC_PARALLEL_HPP
#define VARFRAC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace varfrac {

/// Worker cap: min(VARFRAC_THREADS, hardware concurrency), at least 1.
int worker_count();

/// Runs fn(i) for i in [0, n). Iterations must be independent; results must
/// not depend on execution order (each index writes its own slots), so the
/// output is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace varfrac

#endif
