#pragma once

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tqftkit {

// Deterministic fold kernels. Every heavy sum in the library is a fold of a
// cheap integer function over an index range; these run it serially or with
// OpenMP, with results independent of thread count (integer merges commute).

// Per-residue counts of phase_of(i) mod `modulus` over i in [0, n).
template <class F>
std::vector<long long> phase_histogram_fold(long long n, long modulus, F&& phase_of,
                                            bool parallel = true) {
  std::vector<long long> counts(static_cast<std::size_t>(modulus), 0);
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::vector<long long> local(static_cast<std::size_t>(modulus), 0);
#pragma omp for schedule(static)
      for (long long i = 0; i < n; ++i) ++local[static_cast<std::size_t>(phase_of(i))];
#pragma omp critical
      for (long k = 0; k < modulus; ++k)
        counts[static_cast<std::size_t>(k)] += local[static_cast<std::size_t>(k)];
    }
    return counts;
  }
#endif
  (void)parallel;
  for (long long i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(phase_of(i))];
  return counts;
}

template <class P>
long long count_fold(long long n, P&& pred, bool parallel = true) {
  long long total = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (long long i = 0; i < n; ++i) total += pred(i) ? 1 : 0;
    return total;
  }
#endif
  (void)parallel;
  for (long long i = 0; i < n; ++i) total += pred(i) ? 1 : 0;
  return total;
}

}  // namespace tqftkit
