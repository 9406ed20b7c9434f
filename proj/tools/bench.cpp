// Compares the serial and parallel execution paths of the exhaustive
// verification kernels on the heaviest catalog workloads.

#include "lie3/algebra.hpp"
#include "lie3/bialgebra.hpp"
#include "lie3/catalog.hpp"
#include "lie3/prelie.hpp"

#include <chrono>
#include <cstdio>

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(const F& f) {
  auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
  using namespace lie3;
  // The 10-dimensional semidirect products are the largest structures in
  // the catalog; use one per kernel.
  PipelineResult res = reproduce_case("5-c6");
  TriProduct pd = prelie_from_D(res.alg, res.D);

  row("filippov(B)", time_ms([&] { verify_filippov(res.B, Exec::serial); }),
      time_ms([&] { verify_filippov(res.B, Exec::parallel); }));
  row("prelie axioms", time_ms([&] { verify_prelie(pd, Exec::serial); }),
      time_ms([&] { verify_prelie(pd, Exec::parallel); }));
  row("cybe [[r,r,r]]", time_ms([&] { cybe_bracket(res.B, res.r, Exec::serial); }),
      time_ms([&] { cybe_bracket(res.B, res.r, Exec::parallel); }));
  return 0;
}
