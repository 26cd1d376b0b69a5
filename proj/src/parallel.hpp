#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ooc::detail {

inline int thread_count(int workers) {
  if (workers > 0) return workers;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ooc::detail
