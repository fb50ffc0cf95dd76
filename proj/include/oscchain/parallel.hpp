#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oscchain {

enum class Exec { serial, parallel };

inline int max_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_workers(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// One loop body for both execution modes: iterations are independent and write
// only to their own slots, so results never depend on the schedule or the
// worker count. Reductions over slot arrays happen serially at the call site.
template <typename F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
  const bool par = (exec == Exec::parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  (void)par;
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace oscchain
