#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dsw::scenarios {

enum class ModelKind { bbm_bbm, svaerd_kalisch };

std::string to_string(ModelKind m);
ModelKind parse_model(const std::string& name);

/// Everything a scenario run needs. Empty/zero fields take scenario defaults
/// (see `resolve`).
struct ScenarioConfig {
  std::string scenario = "soliton";
  ModelKind model = ModelKind::bbm_bbm;
  std::string variant;
  std::string parameter_set;
  int order = 4;
  std::size_t nodes = 0;
  std::optional<double> t_end;

  std::string method = "tsit5";
  /// Fixed step size; unset selects adaptive stepping.
  std::optional<double> dt;
  /// Step-size controller tolerances; 0 selects the scenario default.
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  bool relaxation = false;

  // scenario specific
  double wavenumber = 0.8;                // traveling_wave
  double amplitude = 0.02;                // traveling_wave
  std::string manufactured_case = "periodic";  // manufactured: periodic | reflecting
  std::vector<double> gauges;             // dingemans
  std::string experimental_data;          // dingemans, optional CSV (gauge_id, t, eta)
  bool naive = false;                     // Svaerd-Kalisch without split forms
  bool swap_upwind = false;               // BBM-BBM upwind roles exchanged

  // convergence study
  bool eoc = false;
  std::vector<int> eoc_orders;
  std::vector<std::size_t> eoc_nodes;

  // output
  std::string output_dir = "dsw_output";
  bool write_files = true;
  /// Write every n-th accepted step to the invariant series.
  std::size_t output_every = 1;
  /// Spacing of dense-output samples for gauges and phase tracking; 0 selects t_end / 500.
  double sample_interval = 0.0;
};

/// Parse a JSON document; unknown keys and wrong types raise ConfigError.
ScenarioConfig parse_config(const std::string& json_text);
/// Read and parse a JSON config file; a missing file raises ConfigError.
ScenarioConfig load_config(const std::string& path);
/// Fill scenario defaults and check consistency. Throws ConfigError.
ScenarioConfig resolve(ScenarioConfig config);

const std::vector<std::string>& scenario_names();

/// value must lie in [lower, upper]; use +-infinity for one-sided bounds.
struct Check {
  std::string name;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

Check make_check(std::string name, double value, double lower, double upper);
std::string describe(const Check& c);

struct EocRow {
  int order = 0;
  std::size_t nodes = 0;
  double spacing = 0.0;
  double error_eta = 0.0;
  double error_v = 0.0;
  std::optional<double> eoc_eta;
  std::optional<double> eoc_v;
};

struct InvariantSample {
  double t = 0.0;
  double mass = 0.0;
  double secondary = 0.0;
  double energy = 0.0;
  std::optional<double> modified_entropy;
  double gamma = 1.0;
};

struct GaugeRecord {
  double x = 0.0;
  std::vector<double> t;
  std::vector<double> eta;
};

struct ScenarioResult {
  ScenarioConfig config;  // resolved
  std::map<std::string, double> metrics;
  std::vector<InvariantSample> invariants;
  std::vector<GaugeRecord> gauges;
  std::vector<EocRow> eoc;
  std::vector<Check> checks;
  std::vector<std::string> files;

  bool passed() const;
};

/// Run one scenario (or its convergence study when `eoc` is set) and write
/// the CSV outputs unless `write_files` is false. DSW_OUTPUT_DIR overrides
/// `output_dir`.
ScenarioResult run_scenario(const ScenarioConfig& config);

/// Pairwise EOC log(e_coarse / e_fine) / log(dx_coarse / dx_fine) within each order.
void fill_eoc(std::vector<EocRow>& rows);

}  // namespace dsw::scenarios
