#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fproots {

// Every parallel kernel has a serial twin that produces byte-identical
// results; Exec picks which one runs.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

} // namespace fproots
