#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#ifdef SPECBLOCKS_HAVE_OPENMP
#include <omp.h>
#endif

namespace specblocks {

// Execution policy for the data-parallel sweep kernels. Every kernel has a
// serial path that is the reference implementation; the tests compare the
// two for identical results and the bench tool compares their timings.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef SPECBLOCKS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). Results must be written to per-index slots;
// the caller merges them in index order so output is deterministic under
// either policy. An exception thrown by fn is rethrown at the lowest
// throwing index, matching what the serial path would report.
template <typename Fn>
void parallel_for(std::int64_t n, Exec exec, Fn&& fn) {
#ifdef SPECBLOCKS_HAVE_OPENMP
  if (exec == Exec::parallel && n > 1) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace specblocks
