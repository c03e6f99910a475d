#include "xychain/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>

#include <json.hpp>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

using nlohmann::json;

constexpr const char* kMeasureColumns =
    "impurity,entropy,concurrence,qx,qy,qz,s_plus,s_minus,le_lower,le_upper,"
    "le_aux_sum,le_aux_max";

void append_measures(std::string& line, const MeasureSet& m) {
  for (double v : {m.impurity, m.entropy, m.concurrence, m.qx, m.qy, m.qz,
                   m.s_plus, m.s_minus, m.le_lower, m.le_upper, m.le_aux_sum,
                   m.le_aux_max}) {
    line += ',';
    line += format_double(v);
  }
}

void meta_csv(std::ostream& os, const char* kind, const ScenarioConfig& cfg,
              bool with_grid) {
  os << "# xychain " << kind << "\n";
  os << "# n=" << cfg.n_sites << "\n";
  os << "# k=" << format_double(cfg.exchange) << "\n";
  os << "# initial=" << initial_state_name(cfg.initial) << "\n";
  if (cfg.pair_mode == PairMode::single) {
    const auto [i, j] = resolve_pair(cfg);
    os << "# pair=" << i << "," << j << "\n";
  } else {
    os << "# pair=all nearest-neighbor\n";
  }
  if (with_grid) {
    os << "# t-start=" << format_double(cfg.t_grid.start) << "\n";
    os << "# t-stop=" << format_double(cfg.t_grid.stop) << "\n";
    os << "# t-step=" << format_double(cfg.t_grid.step) << "\n";
  }
  os << "# time axis: K t / hbar\n";
}

json meta_json(const char* kind, const ScenarioConfig& cfg, bool with_grid) {
  json meta;
  meta["tool"] = "xychain";
  meta["kind"] = kind;
  meta["n"] = cfg.n_sites;
  meta["k"] = cfg.exchange;
  meta["initial"] = initial_state_name(cfg.initial);
  if (cfg.pair_mode == PairMode::single) {
    const auto [i, j] = resolve_pair(cfg);
    meta["pair"] = {i, j};
  } else {
    meta["pair"] = "all nearest-neighbor";
  }
  if (with_grid) {
    meta["t_start"] = cfg.t_grid.start;
    meta["t_stop"] = cfg.t_grid.stop;
    meta["t_step"] = cfg.t_grid.step;
  }
  meta["time_axis"] = "K t / hbar";
  return meta;
}

json measures_json(const std::vector<MeasureSet>& rows) {
  json cols;
  for (const char* name :
       {"impurity", "entropy", "concurrence", "qx", "qy", "qz", "s_plus",
        "s_minus", "le_lower", "le_upper", "le_aux_sum", "le_aux_max"}) {
    cols[name] = json::array();
  }
  for (const MeasureSet& m : rows) {
    cols["impurity"].push_back(m.impurity);
    cols["entropy"].push_back(m.entropy);
    cols["concurrence"].push_back(m.concurrence);
    cols["qx"].push_back(m.qx);
    cols["qy"].push_back(m.qy);
    cols["qz"].push_back(m.qz);
    cols["s_plus"].push_back(m.s_plus);
    cols["s_minus"].push_back(m.s_minus);
    cols["le_lower"].push_back(m.le_lower);
    cols["le_upper"].push_back(m.le_upper);
    cols["le_aux_sum"].push_back(m.le_aux_sum);
    cols["le_aux_max"].push_back(m.le_aux_max);
  }
  return cols;
}

void emit_json(std::ostream& os, const json& doc) { os << doc.dump(2) << "\n"; }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string initial_state_name(InitialState s) {
  return s == InitialState::bell ? "bell" : "unentangled";
}

void write_timeseries(std::ostream& os, const TimeseriesTable& table,
                      const ScenarioConfig& cfg) {
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["meta"] = meta_json("timeseries", cfg, true);
    doc["t"] = table.t;
    doc.update(measures_json(table.rows));
    emit_json(os, doc);
    return;
  }
  meta_csv(os, "timeseries", cfg, true);
  os << "t," << kMeasureColumns << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string line = format_double(table.t[r]);
    append_measures(line, table.rows[r]);
    os << line << "\n";
  }
}

void write_profile(std::ostream& os, const ProfileTable& table,
                   const ScenarioConfig& cfg) {
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["meta"] = meta_json("profile", cfg, false);
    doc["meta"]["time"] = table.t;
    doc["l"] = table.l;
    doc.update(measures_json(table.rows));
    emit_json(os, doc);
    return;
  }
  meta_csv(os, "profile", cfg, false);
  os << "# time=" << format_double(table.t) << "\n";
  os << "l," << kMeasureColumns << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string line = std::to_string(table.l[r]);
    append_measures(line, table.rows[r]);
    os << line << "\n";
  }
}

void write_heatmap(std::ostream& os, const HeatmapGrid& grid,
                   const ScenarioConfig& cfg) {
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["meta"] = meta_json("heatmap", cfg, true);
    doc["meta"]["value"] = "le_lower";
    doc["l"] = grid.l;
    doc["t"] = grid.t;
    json rows = json::array();
    for (std::size_t li = 0; li < grid.l.size(); ++li) {
      json row = json::array();
      for (std::size_t ti = 0; ti < grid.t.size(); ++ti) {
        row.push_back(grid.at(li, ti));
      }
      rows.push_back(std::move(row));
    }
    doc["le_lower"] = std::move(rows);
    emit_json(os, doc);
    return;
  }

  meta_csv(os, "heatmap", cfg, true);
  if (cfg.matrix_layout) {
    // Dense matrix: first row is the time axis, first column the pair index.
    os << "l\\t";
    for (double t : grid.t) os << ',' << format_double(t);
    os << "\n";
    for (std::size_t li = 0; li < grid.l.size(); ++li) {
      os << grid.l[li];
      for (std::size_t ti = 0; ti < grid.t.size(); ++ti) {
        os << ',' << format_double(
                        grid.at(li, ti));
      }
      os << "\n";
    }
    return;
  }
  os << "l,t,le_lower\n";
  for (std::size_t li = 0; li < grid.l.size(); ++li) {
    for (std::size_t ti = 0; ti < grid.t.size(); ++ti) {
      os << grid.l[li] << ',' << format_double(grid.t[ti]) << ','
         << format_double(grid.at(li, ti))
         << "\n";
    }
  }
}

void write_front(std::ostream& os, const FrontEstimate& front,
                 const ScenarioConfig& cfg) {
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["meta"] = meta_json("front", cfg, true);
    doc["velocity"] = front.velocity;
    doc["arrival_time"] = front.arrival_time;
    doc["method"] = front.method;
    emit_json(os, doc);
    return;
  }
  meta_csv(os, "front", cfg, true);
  os << "velocity,arrival_time,method\n";
  os << format_double(front.velocity) << ','
     << format_double(front.arrival_time) << ",\"" << front.method << "\"\n";
}

namespace {

template <typename Payload>
void route_output(const std::string& path, const Payload& payload,
                  const ScenarioConfig& cfg,
                  void (*writer)(std::ostream&, const Payload&,
                                 const ScenarioConfig&)) {
  if (path.empty() || path == "-") {
    writer(std::cout, payload, cfg);
    if (!std::cout) {
      throw IoError("failed writing to stdout");
    }
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw IoError("cannot open output file: " + path);
  }
  writer(os, payload, cfg);
  os.flush();
  if (!os) {
    throw IoError("failed writing output file: " + path);
  }
}

}  // namespace

void write_output(const std::string& path, const TimeseriesTable& table,
                  const ScenarioConfig& cfg) {
  route_output(path, table, cfg, &write_timeseries);
}

void write_output(const std::string& path, const ProfileTable& table,
                  const ScenarioConfig& cfg) {
  route_output(path, table, cfg, &write_profile);
}

void write_output(const std::string& path, const HeatmapGrid& grid,
                  const ScenarioConfig& cfg) {
  route_output(path, grid, cfg, &write_heatmap);
}

void write_output(const std::string& path, const FrontEstimate& front,
                  const ScenarioConfig& cfg) {
  route_output(path, front, cfg, &write_front);
}

}  // namespace xychain
