#pragma once

// Thin OpenMP shim so kernels compile with or without -fopenmp.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

namespace ghz {

/// Block size used by reductions that must be bitwise reproducible regardless of thread count.
/// Partial sums are formed per fixed block, then combined serially in block order.
inline constexpr std::size_t kReductionBlock = 256;

}  // namespace ghz
