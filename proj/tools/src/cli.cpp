#include "dsw/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "dsw/bbm_bbm.hpp"
#include "dsw/errors.hpp"
#include "dsw/scenarios.hpp"

namespace dsw::cli {

namespace {

using scenarios::ScenarioConfig;
using scenarios::ScenarioResult;

struct Flags {
  std::string config;
  std::string scenario, model, variant, parameter_set, method, manufactured_case, output_dir;
  int order = 0;
  std::size_t nodes = 0;
  double t_end = 0.0, dt = 0.0, tol = 0.0, wavenumber = 0.0, amplitude = 0.0;
  bool relaxation = false, eoc = false, naive = false, check = false, no_output = false;
  std::vector<int> orders;
  std::vector<std::size_t> eoc_nodes;
};

void add_run_options(CLI::App& run, Flags& f) {
  run.add_option("-c,--config", f.config, "JSON config file; flags below override its keys");
  run.add_option("-s,--scenario", f.scenario, "soliton | manufactured | lake_at_rest | reflecting_bump | "
                                              "traveling_wave | dingemans");
  run.add_option("-m,--model", f.model, "bbm_bbm | svaerd_kalisch");
  run.add_option("--variant", f.variant, "discretization variant of the model");
  run.add_option("--set", f.parameter_set, "Svaerd-Kalisch parameter set (set1 .. set5)");
  run.add_option("-p,--order", f.order, "order of the SBP operators");
  run.add_option("-N,--nodes", f.nodes, "number of grid nodes");
  run.add_option("-t,--t-end", f.t_end, "final time");
  run.add_option("--dt", f.dt, "fixed time step (default: adaptive)");
  run.add_option("--method", f.method, "rk4 | dp5 | tsit5");
  run.add_option("--tol", f.tol, "absolute and relative tolerance of the step-size controller");
  run.add_flag("--relaxation", f.relaxation, "relaxation in time");
  run.add_flag("--eoc", f.eoc, "convergence study instead of a single run");
  run.add_option("--orders", f.orders, "orders of the convergence study")->delimiter(',');
  run.add_option("--eoc-nodes", f.eoc_nodes, "grid sizes of the convergence study")->delimiter(',');
  run.add_option("--k", f.wavenumber, "wavenumber of the traveling wave");
  run.add_option("--amplitude", f.amplitude, "amplitude of the traveling wave");
  run.add_option("--case", f.manufactured_case, "manufactured solution: periodic | reflecting");
  run.add_flag("--naive", f.naive, "Svaerd-Kalisch without split forms");
  run.add_option("-o,--output-dir", f.output_dir, "directory for CSV output");
  run.add_flag("--check", f.check, "assert the scenario thresholds (exit 3 on failure)");
  run.add_flag("--no-output", f.no_output, "do not write CSV files");
}

ScenarioConfig build_config(const CLI::App& run, const Flags& f) {
  ScenarioConfig c = f.config.empty() ? ScenarioConfig{} : scenarios::load_config(f.config);
  auto given = [&run](const char* name) { return run.count(name) > 0; };
  if (given("--scenario")) c.scenario = f.scenario;
  if (given("--model")) c.model = scenarios::parse_model(f.model);
  if (given("--variant")) c.variant = f.variant;
  if (given("--set")) c.parameter_set = f.parameter_set;
  if (given("--order")) c.order = f.order;
  if (given("--nodes")) c.nodes = f.nodes;
  if (given("--t-end")) c.t_end = f.t_end;
  if (given("--dt")) c.dt = f.dt;
  if (given("--method")) c.method = f.method;
  if (given("--tol")) c.abs_tol = c.rel_tol = f.tol;
  if (f.relaxation) c.relaxation = true;
  if (f.eoc) c.eoc = true;
  if (given("--orders")) c.eoc_orders = f.orders;
  if (given("--eoc-nodes")) c.eoc_nodes = f.eoc_nodes;
  if (given("--k")) c.wavenumber = f.wavenumber;
  if (given("--amplitude")) {
    if (!(f.amplitude > 0.0)) throw ConfigError("amplitude must be positive");
    c.amplitude = f.amplitude;
  }
  if (given("--case")) c.manufactured_case = f.manufactured_case;
  if (f.naive) c.naive = true;
  if (given("--output-dir")) c.output_dir = f.output_dir;
  if (f.no_output) c.write_files = false;
  if (c.t_end && !(*c.t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (c.dt && !(*c.dt > 0.0)) throw ConfigError("dt must be positive");
  if (given("--tol") && !(f.tol > 0.0)) throw ConfigError("tolerance must be positive");
  return c;
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void report(const ScenarioResult& r, std::ostream& out) {
  const ScenarioConfig& c = r.config;
  out << "scenario " << c.scenario << "  model " << scenarios::to_string(c.model) << "  variant " << c.variant;
  if (!c.parameter_set.empty()) out << "  " << c.parameter_set;
  out << "  p=" << c.order << "  N=" << c.nodes << "  t_end=" << number(*c.t_end)
      << (c.relaxation ? "  relaxation" : "") << '\n';
  for (const auto& [name, value] : r.metrics) out << "  " << name << " = " << number(value) << '\n';
  if (!r.eoc.empty()) {
    out << "  order      N      error_eta        error_v    eoc_eta    eoc_v\n";
    for (const auto& row : r.eoc) {
      char line[160];
      std::snprintf(line, sizeof line, "  %5d %6zu %14.6e %14.6e %10s %8s\n", row.order, row.nodes, row.error_eta,
                    row.error_v, row.eoc_eta ? number(*row.eoc_eta).c_str() : "-",
                    row.eoc_v ? number(*row.eoc_v).c_str() : "-");
      out << line;
    }
  }
  for (const auto& f : r.files) out << "  wrote " << f << '\n';
}

void list(std::ostream& out) {
  out << "scenarios:\n";
  for (const auto& s : scenarios::scenario_names()) out << "  " << s << '\n';
  out << "bbm_bbm variants:\n"
         "  periodic_central_wide periodic_central_narrow periodic_constant_depth periodic_upwind\n"
         "  reflecting_central reflecting_upwind\n"
         "svaerd_kalisch variants:\n"
         "  periodic_central_split periodic_upwind reflecting_beta_only\n"
         "svaerd_kalisch parameter sets: set1 set2 set3 set4 set5\n"
         "time integrators: rk4 dp5 tsit5\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dispersive shallow-water scenarios"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* run = app.add_subcommand("run", "run a scenario");
  add_run_options(*run, flags);
  CLI::App* lst = app.add_subcommand("list", "list scenarios, variants and integrators");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  if (lst->parsed()) {
    list(out);
    return ok;
  }

  ScenarioConfig config;
  try {
    config = build_config(*run, flags);
    config = scenarios::resolve(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return config_error;
  }

  ScenarioResult result;
  try {
    result = scenarios::run_scenario(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const IngestionError& e) {
    err << "input error: " << e.what() << '\n';
    return runtime_error;
  } catch (const std::exception& e) {
    err << "run failed: " << e.what() << '\n';
    return runtime_error;
  }

  report(result, out);
  if (!flags.check) return ok;
  if (result.checks.empty()) out << "  no thresholds defined for this configuration\n";
  for (const auto& c : result.checks) out << "  " << scenarios::describe(c) << '\n';
  if (!result.passed()) {
    err << "check failed\n";
    return check_failed;
  }
  return ok;
}

}  // namespace dsw::cli
