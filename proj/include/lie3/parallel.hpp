#pragma once

#include <cstdint>

namespace lie3 {

// Execution policy for the exhaustive check kernels. Every parallel kernel
// has a serial twin; tests assert they produce identical results and the
// bench tool compares their throughput.
enum class Exec { serial, parallel };

// Process default used when a kernel is called without an explicit policy.
Exec default_exec();
void set_default_exec(Exec e);

namespace detail {

// OpenMP-backed index loop; falls back to a plain loop when built without
// OpenMP or when e == Exec::serial. Body must be safe to run concurrently
// on distinct indices.
template <typename Body>
void parallel_for(Exec e, std::int64_t n, const Body& body);

}  // namespace detail
}  // namespace lie3

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lie3::detail {

template <typename Body>
void parallel_for(Exec e, std::int64_t n, const Body& body) {
#ifdef _OPENMP
  if (e == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)e;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace lie3::detail
