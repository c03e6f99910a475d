#pragma once

#include <iosfwd>
#include <string>

#include "xychain/scenario.hpp"

namespace xychain {

// Floating-point field formatting shared by every CSV writer: 17 significant
// digits, enough to reproduce the double exactly.
std::string format_double(double v);

std::string initial_state_name(InitialState s);

// Writers emit either CSV (leading '#' metadata lines, then a header row)
// or a JSON object with a "meta" block, per cfg.format.  Output is a pure
// function of the inputs: identical configuration gives identical bytes.
void write_timeseries(std::ostream& os, const TimeseriesTable& table,
                      const ScenarioConfig& cfg);
void write_profile(std::ostream& os, const ProfileTable& table,
                   const ScenarioConfig& cfg);
void write_heatmap(std::ostream& os, const HeatmapGrid& grid,
                   const ScenarioConfig& cfg);
void write_front(std::ostream& os, const FrontEstimate& front,
                 const ScenarioConfig& cfg);

// Route to the writers above; path "" or "-" writes to stdout, anything
// else to the named file.  Throws IoError naming the path on failure.
void write_output(const std::string& path, const TimeseriesTable& table,
                  const ScenarioConfig& cfg);
void write_output(const std::string& path, const ProfileTable& table,
                  const ScenarioConfig& cfg);
void write_output(const std::string& path, const HeatmapGrid& grid,
                  const ScenarioConfig& cfg);
void write_output(const std::string& path, const FrontEstimate& front,
                  const ScenarioConfig& cfg);

}  // namespace xychain
