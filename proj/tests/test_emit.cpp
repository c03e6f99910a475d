#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xychain/emit.hpp"
#include "xychain/errors.hpp"

using namespace xychain;

namespace {

ScenarioConfig small_config() {
  ScenarioConfig cfg;
  cfg.n_sites = 6;
  cfg.exchange = 1.0;
  cfg.initial = InitialState::bell;
  cfg.t_grid = {0.0, 3.0, 0.5};
  return cfg;
}

std::string render_timeseries(const ScenarioConfig& cfg) {
  std::ostringstream os;
  write_timeseries(os, run_timeseries(cfg), cfg);
  return os.str();
}

}  // namespace

TEST_CASE("format_double: round-trips the value exactly") {
  for (double v : {0.1, 1.0 / 3.0, 12345.678901234567, 1e-17, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv: header, row count, metadata lines") {
  const std::string text = render_timeseries(small_config());
  CHECK(text.find("# xychain timeseries\n") == 0);
  CHECK(text.find("# n=6\n") != std::string::npos);
  CHECK(text.find("t,impurity,entropy,concurrence,qx,qy,qz,s_plus,s_minus,"
                  "le_lower,le_upper,le_aux_sum,le_aux_max\n") !=
        std::string::npos);
  int data_rows = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 't') ++data_rows;
  }
  CHECK(data_rows == 7);
}

TEST_CASE("csv: byte-identical across repeated runs") {
  const ScenarioConfig cfg = small_config();
  CHECK(render_timeseries(cfg) == render_timeseries(cfg));

  ScenarioConfig serial = cfg;
  serial.use_parallel = false;
  CHECK(render_timeseries(cfg) == render_timeseries(serial));
}

TEST_CASE("json: parses and carries the metadata block") {
  ScenarioConfig cfg = small_config();
  cfg.format = OutputFormat::json;
  std::ostringstream os;
  write_timeseries(os, run_timeseries(cfg), cfg);
  const nlohmann::json doc = nlohmann::json::parse(os.str());
  CHECK(doc["meta"]["tool"] == "xychain");
  CHECK(doc["meta"]["kind"] == "timeseries");
  CHECK(doc["meta"]["n"] == 6);
  CHECK(doc["meta"]["initial"] == "bell");
  CHECK(doc["meta"]["t_step"] == 0.5);
  CHECK(doc["t"].size() == 7);
  CHECK(doc["concurrence"].size() == 7);
  CHECK(doc["le_lower"].size() == 7);
}

TEST_CASE("heatmap emission: long form and matrix form agree") {
  ScenarioConfig cfg = small_config();
  cfg.pair_mode = PairMode::all_nearest_neighbor;
  cfg.t_grid = {0.0, 1.0, 0.5};
  const HeatmapGrid grid = run_heatmap(cfg);

  std::ostringstream long_form;
  write_heatmap(long_form, grid, cfg);
  int rows = 0;
  std::istringstream is(long_form.str());
  std::string line;
  std::string header;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = line;
      continue;
    }
    ++rows;
  }
  CHECK(header == "l,t,le_lower");
  CHECK(rows == 5 * 3);

  cfg.matrix_layout = true;
  std::ostringstream matrix;
  write_heatmap(matrix, grid, cfg);
  std::istringstream ms(matrix.str());
  std::string axis;
  while (std::getline(ms, axis)) {
    if (!axis.empty() && axis[0] != '#') break;
  }
  CHECK(axis.rfind("l\\t,", 0) == 0);

  cfg.format = OutputFormat::json;
  std::ostringstream js;
  write_heatmap(js, grid, cfg);
  const nlohmann::json doc = nlohmann::json::parse(js.str());
  CHECK(doc["l"].size() == 5);
  CHECK(doc["t"].size() == 3);
  CHECK(doc["le_lower"].size() == 5);
  CHECK(doc["le_lower"][0].size() == 3);
  CHECK(doc["le_lower"][0][0].get<double>() == grid.at(0, 0));
}

TEST_CASE("profile and front emission") {
  ScenarioConfig cfg = small_config();
  cfg.pair_mode = PairMode::all_nearest_neighbor;
  const ProfileTable profile = run_profile(cfg, 2.0);
  std::ostringstream ps;
  write_profile(ps, profile, cfg);
  CHECK(ps.str().find("# time=2\n") != std::string::npos);
  CHECK(ps.str().find("l,impurity,") != std::string::npos);

  FrontEstimate front;
  front.velocity = 0.97;
  front.arrival_time = 21.4;
  front.method = "test";
  std::ostringstream fs;
  write_front(fs, front, cfg);
  CHECK(fs.str().find("velocity,arrival_time,method\n") != std::string::npos);
  CHECK(fs.str().find("0.96999999999999997,21.399999999999999,\"test\"\n") !=
        std::string::npos);
}

TEST_CASE("write_output: files are created and failures name the path") {
  const ScenarioConfig cfg = small_config();
  const TimeseriesTable table = run_timeseries(cfg);
  const std::string path = "emit_test_output.csv";
  write_output(path, table, cfg);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream read_back;
  read_back << in.rdbuf();
  CHECK(read_back.str() == render_timeseries(cfg));
  in.close();
  std::remove(path.c_str());

  try {
    write_output("no_such_dir/deep/file.csv", table, cfg);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("no_such_dir/deep/file.csv") !=
          std::string::npos);
  }
}
