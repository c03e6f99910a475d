#include "xychain/scan.hpp"

#include <cstdint>
#include <exception>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

// One grid row: evolve once, then measure every pair.
void scan_row(const ModeTable& modes, const AmplitudeVector& initial,
              const GridSpec& grid, std::size_t ti, MeasureSet* out) {
  const AmplitudeVector psi =
      evolve_general(modes, initial, grid.times[ti]);
  for (std::size_t pi = 0; pi < grid.pairs.size(); ++pi) {
    const auto [i, j] = grid.pairs[pi];
    out[ti * grid.pairs.size() + pi] = measure_all(rdm_from_magnon(psi, i, j));
  }
}

}  // namespace

std::vector<MeasureSet> scan_serial(const ModeTable& modes,
                                    const AmplitudeVector& initial,
                                    const GridSpec& grid) {
  std::vector<MeasureSet> cells(grid.times.size() * grid.pairs.size());
  for (std::size_t ti = 0; ti < grid.times.size(); ++ti) {
    scan_row(modes, initial, grid, ti, cells.data());
  }
  return cells;
}

std::vector<MeasureSet> scan_parallel(const ModeTable& modes,
                                      const AmplitudeVector& initial,
                                      const GridSpec& grid) {
  std::vector<MeasureSet> cells(grid.times.size() * grid.pairs.size());
  const std::int64_t rows = static_cast<std::int64_t>(grid.times.size());
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static)
  for (std::int64_t ti = 0; ti < rows; ++ti) {
    try {
      scan_row(modes, initial, grid, static_cast<std::size_t>(ti),
               cells.data());
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return cells;
}

std::vector<MeasureSet> scan(const ModeTable& modes,
                             const AmplitudeVector& initial,
                             const GridSpec& grid, bool use_parallel) {
#ifdef _OPENMP
  if (use_parallel) {
    return scan_parallel(modes, initial, grid);
  }
#else
  (void)use_parallel;
#endif
  return scan_serial(modes, initial, grid);
}

}  // namespace xychain
