#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monoreg {

// Execution mode for the grid kernels. Serial is the reference path; the
// parallel path must produce bitwise-identical results (each index writes
// only its own slot, no reductions across threads).
enum class Exec { Serial, Parallel };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace monoreg
