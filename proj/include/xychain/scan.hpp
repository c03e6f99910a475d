#pragma once

#include <utility>
#include <vector>

#include "xychain/measures.hpp"

namespace xychain {

// A rectangular (time, pair) evaluation grid.  Times are physical
// (hbar = 1); pairs are 1-based with i < j.
struct GridSpec {
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> times;
};

// Evaluates measure_all(rdm_from_magnon(evolve_general(initial, t), i, j))
// for every cell.  Result is row-major by time: cell (ti, pi) lives at
// ti * pairs.size() + pi.
//
// Every cell is independent and computed by identical code in both kernels,
// so the parallel kernel is bit-for-bit equal to the serial reference.
std::vector<MeasureSet> scan_serial(const ModeTable& modes,
                                    const AmplitudeVector& initial,
                                    const GridSpec& grid);
std::vector<MeasureSet> scan_parallel(const ModeTable& modes,
                                      const AmplitudeVector& initial,
                                      const GridSpec& grid);

// Dispatches to scan_parallel when OpenMP is compiled in and use_parallel
// is set, scan_serial otherwise.
std::vector<MeasureSet> scan(const ModeTable& modes,
                             const AmplitudeVector& initial,
                             const GridSpec& grid, bool use_parallel = true);

}  // namespace xychain
