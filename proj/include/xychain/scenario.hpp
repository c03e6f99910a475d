#pragma once

#include <string>
#include <vector>

#include "xychain/scan.hpp"

namespace xychain {

enum class InitialState { unentangled, bell };
enum class PairMode { single, all_nearest_neighbor };
enum class OutputFormat { csv, json };

// Time axes in all configuration and output are K t / hbar, matching the
// natural magnon time scale 1/K; the single conversion to physical time
// happens when the grid is built.
struct TimeGrid {
  double start = 0.0;
  double stop = 200.0;
  double step = 0.1;
};

struct ScenarioConfig {
  int n_sites = 20;
  double exchange = 1.0;
  InitialState initial = InitialState::unentangled;
  PairMode pair_mode = PairMode::single;
  int pair_i = 0;  // 0 means "last pair (N-1, N)"
  int pair_j = 0;
  TimeGrid t_grid;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
  bool matrix_layout = false;  // heatmap only: emit the dense matrix form
  bool use_parallel = true;
};

// Throws ConfigError on step <= 0, stop < start, or a pair outside 1..N.
void validate_config(const ScenarioConfig& cfg);

// The pair actually used in single-pair mode, defaults resolved.
std::pair<int, int> resolve_pair(const ScenarioConfig& cfg);

// Inclusive sample points of the grid, in K t / hbar units.
std::vector<double> grid_times(const TimeGrid& grid);

AmplitudeVector initial_state(const ScenarioConfig& cfg);

// One pair, every grid time.
struct TimeseriesTable {
  std::vector<double> t;  // K t / hbar
  std::vector<MeasureSet> rows;
  int pair_i = 0, pair_j = 0;
};
TimeseriesTable run_timeseries(const ScenarioConfig& cfg);

// Every nearest-neighbor pair (l, l+1), one time.
struct ProfileTable {
  double t = 0;
  std::vector<int> l;  // 1..N-1
  std::vector<MeasureSet> rows;
};
ProfileTable run_profile(const ScenarioConfig& cfg, double t);

// Index of the pair with the largest le_lower; ties go to the smaller l.
int profile_peak(const ProfileTable& profile);

// le_lower over every nearest-neighbor pair and every grid time,
// row-major by l: value(li, ti) = le_lower[li * t.size() + ti].
struct HeatmapGrid {
  std::vector<int> l;
  std::vector<double> t;
  std::vector<double> le_lower;

  double at(std::size_t li, std::size_t ti) const {
    return le_lower[li * t.size() + ti];
  }
};
HeatmapGrid run_heatmap(const ScenarioConfig& cfg);

// Ridge location argmax_l le_lower(l, t) at each time; ties toward smaller l.
std::vector<int> ridge_path(const HeatmapGrid& grid);

struct FrontEstimate {
  double velocity = 0;      // sites per unit physical time; = K for v = K
  double arrival_time = 0;  // first ridge arrival at pair (N-1, N), K t / hbar
  std::string method;
};

// Least-squares slope of the ridge location against time, restricted to the
// first traversal (from the first ridge movement to the first arrival at
// l = N-1), scaled by K to convert from the K t / hbar axis.  Throws
// FrontNotDetected when the ridge never reaches the end pair.
FrontEstimate estimate_front_velocity(const HeatmapGrid& grid,
                                      double exchange);

// Count of samples where the series dips below an absolute threshold.
int count_near_zero(const std::vector<double>& series, double threshold);

}  // namespace xychain
