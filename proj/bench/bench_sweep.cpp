// Serial reference vs OpenMP sweep, plus per-point cost of the closed form
// against the full matrix pipeline.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string_view>

#include "mixspin/analysis.hpp"

using namespace mixspin;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  const int threads = omp_get_max_threads();
  std::printf("%-8s %10s %10s %10s %8s\n", "preset", "points", "serial_s", "omp_s", "speedup");
  for (std::string_view id : {"4", "8", "10"}) {
    const SweepSpec spec = figure_preset(id);
    const double ts = best_of(3, [&] { sweep_serial(spec); });
    const double tp = best_of(3, [&] { sweep(spec, threads); });
    std::printf("%-8.*s %10zu %10.4f %10.4f %8.2f\n", int(id.size()), id.data(), spec.point_count(), ts, tp, ts / tp);
  }

  SweepSpec spec = figure_preset("4");
  const double canonical = best_of(3, [&] { sweep_serial(spec); });
  spec.mode = EvalMode::Oracle;
  const double oracle = best_of(1, [&] { sweep_serial(spec); });
  const double n = double(spec.point_count());
  std::printf("per point: canonical %.1f ns, oracle %.1f ns (%d threads available)\n", 1e9 * canonical / n,
              1e9 * oracle / n, threads);
}
