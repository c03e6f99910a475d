#include "xychain/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.n_sites < 2) {
    throw ConfigError("chain needs at least 2 sites, got " +
                      std::to_string(cfg.n_sites));
  }
  if (!std::isfinite(cfg.exchange) || cfg.exchange == 0.0) {
    throw ConfigError("exchange strength must be finite and nonzero");
  }
  if (!(cfg.t_grid.step > 0.0) || !std::isfinite(cfg.t_grid.step)) {
    throw ConfigError("time step must be positive");
  }
  if (!std::isfinite(cfg.t_grid.start) || !std::isfinite(cfg.t_grid.stop) ||
      cfg.t_grid.stop < cfg.t_grid.start) {
    throw ConfigError("time grid must satisfy stop >= start");
  }
  if (cfg.pair_mode == PairMode::single) {
    const auto [i, j] = resolve_pair(cfg);
    if (i < 1 || j > cfg.n_sites || i >= j) {
      throw ConfigError("pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not a valid site pair for " +
                        std::to_string(cfg.n_sites) + " sites");
    }
  }
}

std::pair<int, int> resolve_pair(const ScenarioConfig& cfg) {
  if (cfg.pair_i == 0 && cfg.pair_j == 0) {
    return {cfg.n_sites - 1, cfg.n_sites};
  }
  return {cfg.pair_i, cfg.pair_j};
}

std::vector<double> grid_times(const TimeGrid& grid) {
  // Robust inclusive count; 1e-9 absorbs accumulated step rounding.
  const auto count = static_cast<std::size_t>(
      std::floor((grid.stop - grid.start) / grid.step + 1e-9)) + 1;
  std::vector<double> t(count);
  for (std::size_t k = 0; k < count; ++k) {
    t[k] = grid.start + static_cast<double>(k) * grid.step;
  }
  return t;
}

AmplitudeVector initial_state(const ScenarioConfig& cfg) {
  return cfg.initial == InitialState::bell ? initial_bell(cfg.n_sites)
                                           : initial_unentangled(cfg.n_sites);
}

namespace {

std::vector<std::pair<int, int>> nearest_neighbor_pairs(int n_sites) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n_sites - 1);
  for (int l = 1; l < n_sites; ++l) pairs.emplace_back(l, l + 1);
  return pairs;
}

// Output time axes are K t / hbar; evolution wants physical t.
std::vector<double> to_physical(const std::vector<double>& scaled, double k) {
  std::vector<double> t(scaled.size());
  for (std::size_t idx = 0; idx < scaled.size(); ++idx) {
    t[idx] = scaled[idx] / k;
  }
  return t;
}

}  // namespace

TimeseriesTable run_timeseries(const ScenarioConfig& cfg) {
  validate_config(cfg);
  if (cfg.pair_mode != PairMode::single) {
    throw ConfigError("timeseries runs on a single pair");
  }

  TimeseriesTable table;
  table.t = grid_times(cfg.t_grid);
  std::tie(table.pair_i, table.pair_j) = resolve_pair(cfg);

  GridSpec grid;
  grid.pairs = {{table.pair_i, table.pair_j}};
  grid.times = to_physical(table.t, cfg.exchange);
  table.rows = scan(mode_table(cfg.n_sites, cfg.exchange), initial_state(cfg),
                    grid, cfg.use_parallel);
  return table;
}

ProfileTable run_profile(const ScenarioConfig& cfg, double t) {
  ScenarioConfig snapshot = cfg;
  snapshot.pair_mode = PairMode::all_nearest_neighbor;
  snapshot.t_grid = {t, t, 1.0};
  validate_config(snapshot);

  ProfileTable table;
  table.t = t;

  GridSpec grid;
  grid.pairs = nearest_neighbor_pairs(cfg.n_sites);
  grid.times = {t / cfg.exchange};
  table.rows = scan(mode_table(cfg.n_sites, cfg.exchange),
                    initial_state(snapshot), grid, cfg.use_parallel);
  table.l.resize(grid.pairs.size());
  for (std::size_t idx = 0; idx < grid.pairs.size(); ++idx) {
    table.l[idx] = grid.pairs[idx].first;
  }
  return table;
}

int profile_peak(const ProfileTable& profile) {
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < profile.rows.size(); ++idx) {
    if (profile.rows[idx].le_lower > profile.rows[best].le_lower) best = idx;
  }
  return profile.l[best];
}

HeatmapGrid run_heatmap(const ScenarioConfig& cfg) {
  ScenarioConfig full = cfg;
  full.pair_mode = PairMode::all_nearest_neighbor;
  validate_config(full);

  HeatmapGrid out;
  out.t = grid_times(cfg.t_grid);
  GridSpec grid;
  grid.pairs = nearest_neighbor_pairs(cfg.n_sites);
  grid.times = to_physical(out.t, cfg.exchange);
  const std::vector<MeasureSet> cells =
      scan(mode_table(cfg.n_sites, cfg.exchange), initial_state(full), grid,
           cfg.use_parallel);

  out.l.resize(grid.pairs.size());
  for (std::size_t idx = 0; idx < grid.pairs.size(); ++idx) {
    out.l[idx] = grid.pairs[idx].first;
  }
  // scan is row-major by time; the heatmap is row-major by l.
  out.le_lower.resize(cells.size());
  for (std::size_t ti = 0; ti < out.t.size(); ++ti) {
    for (std::size_t li = 0; li < out.l.size(); ++li) {
      out.le_lower[li * out.t.size() + ti] =
          cells[ti * out.l.size() + li].le_lower;
    }
  }
  return out;
}

std::vector<int> ridge_path(const HeatmapGrid& grid) {
  std::vector<int> path(grid.t.size());
  for (std::size_t ti = 0; ti < grid.t.size(); ++ti) {
    std::size_t best = 0;
    for (std::size_t li = 1; li < grid.l.size(); ++li) {
      if (grid.at(li, ti) > grid.at(best, ti)) best = li;
    }
    path[ti] = grid.l[best];
  }
  return path;
}

FrontEstimate estimate_front_velocity(const HeatmapGrid& grid,
                                      double exchange) {
  if (grid.l.empty() || grid.t.size() < 2) {
    throw ConfigError("front estimation needs a time-resolved heatmap");
  }
  const std::vector<int> ridge = ridge_path(grid);
  const int end_pair = grid.l.back();

  std::size_t arrive = grid.t.size();
  for (std::size_t ti = 0; ti < ridge.size(); ++ti) {
    if (ridge[ti] == end_pair) {
      arrive = ti;
      break;
    }
  }
  if (arrive == grid.t.size()) {
    throw FrontNotDetected(
        "ridge never reached the end pair within the sampled window");
  }

  std::size_t depart = arrive;
  for (std::size_t ti = 0; ti < arrive; ++ti) {
    if (ridge[ti] != ridge[0]) {
      depart = ti;
      break;
    }
  }
  if (arrive <= depart) {
    throw FrontNotDetected("ridge reached the end pair without a resolvable "
                           "traversal window");
  }

  // Least squares l*(t) = v t + b over the first traversal.
  double st = 0, sl = 0, stt = 0, stl = 0;
  const auto count = static_cast<double>(arrive - depart + 1);
  for (std::size_t ti = depart; ti <= arrive; ++ti) {
    st += grid.t[ti];
    sl += ridge[ti];
    stt += grid.t[ti] * grid.t[ti];
    stl += grid.t[ti] * ridge[ti];
  }
  const double denom = count * stt - st * st;
  if (denom <= 0.0) {
    throw FrontNotDetected("degenerate time window for the ridge fit");
  }
  const double slope = (count * stl - st * sl) / denom;
  if (slope <= 0.0) {
    throw FrontNotDetected("ridge fit has non-positive slope");
  }

  FrontEstimate front;
  front.velocity = slope * exchange;
  front.arrival_time = grid.t[arrive];
  front.method = "least-squares fit of the le_lower ridge over the first "
                 "traversal";
  return front;
}

int count_near_zero(const std::vector<double>& series, double threshold) {
  return static_cast<int>(std::count_if(
      series.begin(), series.end(),
      [threshold](double v) { return v < threshold; }));
}

}  // namespace xychain
