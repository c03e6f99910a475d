// Wall-clock comparison of the serial reference kernel against the OpenMP
// grid kernel, and a bitwise equality check of their outputs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xychain/scan.hpp"

using namespace xychain;

namespace {

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

bool bitwise_equal(const std::vector<MeasureSet>& a,
                   const std::vector<MeasureSet>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(MeasureSet)) == 0;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%6s %6s %6s  %10s %10s %8s  %s\n", "sites", "times", "pairs",
              "serial[s]", "openmp[s]", "speedup", "equal");

  for (int n : {40, 80, 160}) {
    const ModeTable modes = mode_table(n, 1.0);
    const AmplitudeVector start = initial_bell(n);

    GridSpec grid;
    for (int l = 1; l < n; ++l) grid.pairs.emplace_back(l, l + 1);
    const int steps = 400;
    grid.times.resize(steps);
    for (int k = 0; k < steps; ++k) grid.times[k] = 0.5 * k;

    std::vector<MeasureSet> serial, parallel;
    const double ts =
        time_best_of(3, [&] { serial = scan_serial(modes, start, grid); });
    const double tp =
        time_best_of(3, [&] { parallel = scan_parallel(modes, start, grid); });

    std::printf("%6d %6d %6zu  %10.4f %10.4f %8.2f  %s\n", n, steps,
                grid.pairs.size(), ts, tp, ts / tp,
                bitwise_equal(serial, parallel) ? "yes" : "NO");
  }
  return 0;
}
