#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tfpe {

/// Worker cap, resolved once per process from TEMPERED_FPE_THREADS
/// (unset or 0 means "use all hardware threads").
int max_threads();

/// Static-schedule parallel loop. Each index is processed exactly once and
/// writes only to its own slot, so results do not depend on the thread count.
template <typename F>
void parallel_for(long n, F&& body) {
#ifdef _OPENMP
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long i = 0; i < n; ++i) body(i);
#else
    for (long i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace tfpe
