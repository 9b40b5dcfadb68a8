// Command-line front end: single runs and parameter sweeps over scenario
// JSON files, reporting per-provider metrics as CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specshare/engine.hpp"
#include "specshare/errors.hpp"
#include "specshare/scenario_io.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitInvariantFault = 3;

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw specshare::ConfigError("sweep: bad axis value \"" + item + "\"");
    }
  }
  if (values.empty()) throw specshare::ConfigError("sweep: --values list is empty");
  return values;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw specshare::ConfigError("cannot open output file " + path);
  return file;
}

int run_command(const std::string& scenario_path, std::optional<uint64_t> seed,
                const std::string& trace_path, const std::string& out_path) {
  specshare::Scenario scenario = specshare::load_scenario_file(scenario_path);
  if (seed) scenario.seed = *seed;

  specshare::RunOptions options;
  std::ofstream trace_file;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) throw specshare::ConfigError("cannot open trace file " + trace_path);
    options.trace = &trace_file;
  }

  specshare::RunResult result = specshare::run(scenario, options);

  std::ofstream out_file;
  std::ostream& out = open_output(out_file, out_path);
  specshare::write_csv_header(out);
  specshare::write_csv_rows(out, scenario.id, std::nullopt, 0, result.seed, result.report);
  return 0;
}

int sweep_command(const std::string& scenario_path, const std::string& axis_name,
                  const std::string& values_csv, int reps, const std::string& out_path) {
  specshare::Scenario scenario = specshare::load_scenario_file(scenario_path);
  const specshare::SweepAxis axis = specshare::parse_axis(axis_name);
  const std::vector<double> values = parse_values(values_csv);

  std::vector<specshare::SweepRow> rows = specshare::sweep(scenario, axis, values, reps);

  std::ofstream out_file;
  std::ostream& out = open_output(out_file, out_path);
  specshare::write_csv_header(out);
  for (const specshare::SweepRow& row : rows) {
    specshare::write_csv_rows(out, scenario.id, row.axis_value, row.replication, row.seed,
                              row.report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum-sharing traffic simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string trace_path;
  std::optional<uint64_t> seed;

  CLI::App* cmd_run = app.add_subcommand("run", "Execute one scenario and print CSV metrics");
  cmd_run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  cmd_run->add_option("--seed", seed, "Override the scenario seed");
  cmd_run->add_option("--trace", trace_path, "Write a tab-separated message trace");
  cmd_run->add_option("--out", out_path, "Output CSV file (default stdout)");

  std::string axis_name;
  std::string values_csv;
  int reps = 10;

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Run a parameter sweep with replications");
  cmd_sweep->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  cmd_sweep->add_option("--axis", axis_name, "mean_arrival, correlation or sharing")->required();
  cmd_sweep->add_option("--values", values_csv, "Comma-separated axis values")->required();
  cmd_sweep->add_option("--reps", reps, "Replications per axis value (default 10)");
  cmd_sweep->add_option("--out", out_path, "Output CSV file")->required();

  try {
    app.parse(argc, argv);
    if (cmd_run->parsed()) return run_command(scenario_path, seed, trace_path, out_path);
    return sweep_command(scenario_path, axis_name, values_csv, reps, out_path);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfigError;
  } catch (const specshare::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const specshare::InvariantFault& e) {
    std::cerr << "invariant fault: " << e.what() << "\n";
    return kExitInvariantFault;
  }
}
