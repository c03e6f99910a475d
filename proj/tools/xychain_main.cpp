// xychain: entanglement transport in an open Heisenberg-XY chain.
//
// Subcommands:
//   timeseries   pairwise measures of one pair over a time grid
//   profile      measures of every nearest-neighbor pair at one time
//   heatmap      le_lower over (pair, time)
//   front        velocity of the traveling entanglement ridge
//   validate     brute-force cross-check of the closed-form dynamics
//
// Exit codes: 0 success/PASS, 1 analysis FAIL, 2 bad configuration,
// 3 I/O failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xychain/emit.hpp"
#include "xychain/errors.hpp"
#include "xychain/oracle.hpp"

namespace {

using namespace xychain;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CliOptions {
  ScenarioConfig cfg;
  std::string initial = "unentangled";
  std::string format = "csv";
  std::string pair;
  std::string config_path;
  double profile_time = 0.0;
  bool serial = false;
  // validate only
  int validate_n = 8;
  double validate_k = 1.0;
  double delta = 0.0;
  int trials = 50;
  double tol = 1e-10;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool truthy(const std::string& v) {
  return v == "true" || v == "1" || v == "yes" || v == "on";
}

bool falsy(const std::string& v) {
  return v == "false" || v == "0" || v == "no" || v == "off";
}

// Flat key=value config support: every key mirrors a long flag of the
// chosen subcommand.  File values are injected as extra arguments for keys
// the command line did not set, so explicit flags always win.
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
  std::string path;
  for (std::size_t k = 1; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) {
      path = args[k + 1];
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path);
  }
  const auto given = [&args](const std::string& flag) {
    for (const std::string& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };

  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line is not key=value: '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line has an empty key: '" + line + "'");
    }
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    if (key == "matrix" || key == "serial") {
      if (truthy(value)) {
        args.push_back(flag);
      } else if (!falsy(value)) {
        throw ConfigError("config key '" + key + "' expects a boolean, got '" +
                          value + "'");
      }
      continue;
    }
    args.push_back(flag);
    args.push_back(value);
  }
  return args;
}

int parse_site(const std::string& text) {
  std::size_t used = 0;
  const int site = std::stoi(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument(text);
  }
  return site;
}

void parse_pair(const std::string& text, ScenarioConfig& cfg) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("--pair expects i,j");
  }
  try {
    cfg.pair_i = parse_site(text.substr(0, comma));
    cfg.pair_j = parse_site(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw ConfigError("--pair expects two integers, got '" + text + "'");
  }
}

void finalize(CliOptions& opt) {
  if (opt.initial == "unentangled") {
    opt.cfg.initial = InitialState::unentangled;
  } else if (opt.initial == "bell") {
    opt.cfg.initial = InitialState::bell;
  } else {
    throw ConfigError("--initial must be 'unentangled' or 'bell'");
  }
  if (opt.format == "csv") {
    opt.cfg.format = OutputFormat::csv;
  } else if (opt.format == "json") {
    opt.cfg.format = OutputFormat::json;
  } else {
    throw ConfigError("--format must be 'csv' or 'json'");
  }
  if (!opt.pair.empty()) {
    parse_pair(opt.pair, opt.cfg);
  }
  opt.cfg.use_parallel = !opt.serial;
}

void add_common(CLI::App* sub, CliOptions& opt, bool with_grid) {
  sub->add_option("--n", opt.cfg.n_sites, "number of sites");
  sub->add_option("--k", opt.cfg.exchange, "exchange strength K");
  sub->add_option("--initial", opt.initial,
                  "initial state: unentangled | bell");
  if (with_grid) {
    sub->add_option("--t-start", opt.cfg.t_grid.start,
                    "first sample, units K t / hbar");
    sub->add_option("--t-stop", opt.cfg.t_grid.stop, "last sample");
    sub->add_option("--t-step", opt.cfg.t_grid.step, "sample spacing");
  }
  sub->add_option("--format", opt.format, "output format: csv | json");
  sub->add_option("--out", opt.cfg.output_path,
                  "output path (default stdout)");
  sub->add_flag("--serial", opt.serial, "use the serial reference kernel");
  sub->add_option("--config", opt.config_path,
                  "flat key=value file mirroring the flags; flags win");
}

int run_validate(const CliOptions& opt) {
  const HamiltonianSpec spec =
      hamiltonian_spec(opt.validate_n, opt.validate_k, opt.delta);
  const ValidationReport report = validate_sector(spec, opt.trials, opt.tol);
  std::cout << report.to_text();
  return report.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement transport in an open Heisenberg-XY spin chain"};
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* timeseries = app.add_subcommand(
      "timeseries", "pairwise measures of one pair over a time grid");
  add_common(timeseries, opt, true);
  timeseries->add_option("--pair", opt.pair,
                         "site pair i,j (default: last pair N-1,N)");

  CLI::App* profile = app.add_subcommand(
      "profile", "measures of every nearest-neighbor pair at one time");
  add_common(profile, opt, false);
  profile->add_option("--time", opt.profile_time,
                      "snapshot time, units K t / hbar");

  CLI::App* heatmap =
      app.add_subcommand("heatmap", "le_lower over every (pair, time) cell");
  add_common(heatmap, opt, true);
  heatmap->add_flag("--matrix", opt.cfg.matrix_layout,
                    "emit the dense matrix layout instead of l,t,value rows");

  CLI::App* front = app.add_subcommand(
      "front", "velocity of the traveling entanglement ridge");
  add_common(front, opt, true);

  CLI::App* validate = app.add_subcommand(
      "validate", "brute-force cross-check of the closed-form dynamics");
  validate->add_option("--n", opt.validate_n, "number of sites (2..12)");
  validate->add_option("--k", opt.validate_k, "exchange strength K");
  validate->add_option("--delta", opt.delta,
                       "anisotropy (must be 0; rejected otherwise)");
  validate->add_option("--trials", opt.trials, "random (i, j, t) samples");
  validate->add_option("--tol", opt.tol, "elementwise tolerance");
  validate->add_option("--config", opt.config_path,
                       "flat key=value file mirroring the flags; flags win");

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = apply_config_file(std::move(args));
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  std::vector<const char*> argv_patched;
  argv_patched.reserve(args.size());
  for (const std::string& a : args) argv_patched.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv_patched.size()), argv_patched.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (validate->parsed()) {
      return run_validate(opt);
    }
    finalize(opt);
    if (timeseries->parsed()) {
      opt.cfg.pair_mode = PairMode::single;
      write_output(opt.cfg.output_path, run_timeseries(opt.cfg), opt.cfg);
    } else if (profile->parsed()) {
      opt.cfg.pair_mode = PairMode::all_nearest_neighbor;
      write_output(opt.cfg.output_path, run_profile(opt.cfg, opt.profile_time),
                   opt.cfg);
    } else if (heatmap->parsed()) {
      opt.cfg.pair_mode = PairMode::all_nearest_neighbor;
      write_output(opt.cfg.output_path, run_heatmap(opt.cfg), opt.cfg);
    } else if (front->parsed()) {
      opt.cfg.pair_mode = PairMode::all_nearest_neighbor;
      const FrontEstimate estimate =
          estimate_front_velocity(run_heatmap(opt.cfg), opt.cfg.exchange);
      write_output(opt.cfg.output_path, estimate, opt.cfg);
    }
    return kExitPass;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FrontNotDetected& e) {
    std::cerr << "front not detected: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
