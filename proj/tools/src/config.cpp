#include <algorithm>
#include <fstream>
#include <sstream>

#include "dsw/bbm_bbm.hpp"
#include "dsw/errors.hpp"
#include "dsw/scenarios.hpp"
#include "dsw/svaerd_kalisch.hpp"
#include "dsw/time_integration.hpp"
#include "json.hpp"

namespace dsw::scenarios {

using json = nlohmann::json;

std::string to_string(ModelKind m) { return m == ModelKind::bbm_bbm ? "bbm_bbm" : "svaerd_kalisch"; }

ModelKind parse_model(const std::string& name) {
  if (name == "bbm_bbm") return ModelKind::bbm_bbm;
  if (name == "svaerd_kalisch") return ModelKind::svaerd_kalisch;
  throw ConfigError("unknown model '" + name + "' (expected bbm_bbm or svaerd_kalisch)");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"soliton",         "manufactured",   "lake_at_rest",
                                              "reflecting_bump", "traveling_wave", "dingemans"};
  return names;
}

namespace {

template <class T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type: " + j.dump());
  }
}

double positive(double x, const std::string& key) {
  if (!(x > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
  return x;
}

bool is_periodic_variant(ModelKind m, const std::string& variant) {
  if (m == ModelKind::bbm_bbm) return is_periodic(parse_bbm_variant(variant));
  return parse_sk_variant(variant) != SkVariant::reflecting_beta_only;
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const json& v = it.value();
    if (k == "scenario") c.scenario = get<std::string>(v, k);
    else if (k == "model") c.model = parse_model(get<std::string>(v, k));
    else if (k == "variant") c.variant = get<std::string>(v, k);
    else if (k == "parameter_set") c.parameter_set = get<std::string>(v, k);
    else if (k == "order") c.order = get<int>(v, k);
    else if (k == "N" || k == "nodes") c.nodes = get<std::size_t>(v, k);
    else if (k == "t_end") c.t_end = positive(get<double>(v, k), k);
    else if (k == "method") c.method = get<std::string>(v, k);
    else if (k == "dt") c.dt = positive(get<double>(v, k), k);
    else if (k == "abs_tol") c.abs_tol = positive(get<double>(v, k), k);
    else if (k == "rel_tol") c.rel_tol = positive(get<double>(v, k), k);
    else if (k == "relaxation") c.relaxation = get<bool>(v, k);
    else if (k == "wavenumber") c.wavenumber = positive(get<double>(v, k), k);
    else if (k == "amplitude") c.amplitude = positive(get<double>(v, k), k);
    else if (k == "manufactured_case") c.manufactured_case = get<std::string>(v, k);
    else if (k == "gauges") c.gauges = get<std::vector<double>>(v, k);
    else if (k == "experimental_data") c.experimental_data = get<std::string>(v, k);
    else if (k == "naive") c.naive = get<bool>(v, k);
    else if (k == "swap_upwind") c.swap_upwind = get<bool>(v, k);
    else if (k == "eoc") c.eoc = get<bool>(v, k);
    else if (k == "eoc_orders") c.eoc_orders = get<std::vector<int>>(v, k);
    else if (k == "eoc_nodes") c.eoc_nodes = get<std::vector<std::size_t>>(v, k);
    else if (k == "output_dir") c.output_dir = get<std::string>(v, k);
    else if (k == "output_every") c.output_every = get<std::size_t>(v, k);
    else if (k == "sample_interval") c.sample_interval = positive(get<double>(v, k), k);
    else throw ConfigError("unknown config key '" + k + "'");
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ScenarioConfig resolve(ScenarioConfig c) {
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), c.scenario) == names.end()) {
    throw ConfigError("unknown scenario '" + c.scenario + "'");
  }
  const bool bbm = c.model == ModelKind::bbm_bbm;
  const std::string& s = c.scenario;
  if (s == "soliton" && !bbm) throw ConfigError("the soliton scenario is defined for bbm_bbm only");
  if (s == "manufactured" && c.manufactured_case != "periodic" && c.manufactured_case != "reflecting") {
    throw ConfigError("manufactured_case must be 'periodic' or 'reflecting'");
  }
  const bool reflecting_case =
      s == "reflecting_bump" || (s == "manufactured" && c.manufactured_case == "reflecting");

  if (c.variant.empty()) {
    if (reflecting_case) {
      c.variant = bbm ? "reflecting_central" : "reflecting_beta_only";
    } else if (s == "soliton" || s == "traveling_wave") {
      c.variant = bbm ? "periodic_constant_depth" : "periodic_central_split";
    } else if (s == "manufactured") {
      c.variant = "periodic_upwind";
    } else {
      c.variant = bbm ? "periodic_central_wide" : "periodic_central_split";
    }
  }
  // parses (and rejects unknown names) for the selected model
  const bool periodic = is_periodic_variant(c.model, c.variant);
  const bool periodic_only = s == "soliton" || s == "traveling_wave" || s == "dingemans";
  if (periodic_only && !periodic) throw ConfigError("scenario " + s + " needs a periodic variant, got " + c.variant);
  if (reflecting_case && periodic) throw ConfigError("scenario " + s + " needs a reflecting variant, got " + c.variant);
  if (s == "manufactured" && !reflecting_case && !periodic) {
    throw ConfigError("manufactured_case 'periodic' needs a periodic variant, got " + c.variant);
  }

  if (!bbm) {
    if (c.parameter_set.empty()) {
      if (!periodic) c.parameter_set = "set5";
      else if (s == "manufactured") c.parameter_set = "set4";
      else c.parameter_set = "set2";
    }
    sk_parameter_set(c.parameter_set);  // validates the name
  } else if (!c.parameter_set.empty()) {
    throw ConfigError("parameter_set applies to svaerd_kalisch only");
  }
  if (bbm && c.naive) throw ConfigError("naive applies to svaerd_kalisch only");
  if (!bbm && c.swap_upwind) throw ConfigError("swap_upwind applies to bbm_bbm only");

  if (c.nodes == 0) {
    if (s == "lake_at_rest") c.nodes = 200;
    else if (s == "manufactured") c.nodes = reflecting_case ? 129 : 128;
    else c.nodes = 512;
  }
  if (c.nodes < 8) throw ConfigError("N must be at least 8");
  if (!c.t_end) {
    if (s == "soliton") c.t_end = c.eoc ? 1.0 : 10.0;
    else if (s == "manufactured") c.t_end = reflecting_case ? 0.5 : 1.0;
    else if (s == "lake_at_rest") c.t_end = 10.0;
    else if (s == "reflecting_bump") c.t_end = 1.0;
    else if (s == "traveling_wave") c.t_end = c.wavenumber < 2.0 ? 50.0 : (c.wavenumber < 10.0 ? 1.0 : 0.75);
    else c.t_end = 70.0;
  }
  if (!c.dt && s == "lake_at_rest") c.dt = bbm ? 0.5 : 2e-4;
  // The unrelaxed reflecting run is judged on its energy drift, which the time error dominates.
  const double default_tol = s == "reflecting_bump" ? 1e-10 : 1e-7;
  if (c.abs_tol == 0.0) c.abs_tol = default_tol;
  if (c.rel_tol == 0.0) c.rel_tol = default_tol;
  tableau_by_name(c.method);  // validates the name
  if (c.dt && !(*c.dt > 0.0)) throw ConfigError("dt must be positive");
  if (c.output_every == 0) throw ConfigError("output_every must be positive");

  if (c.eoc) {
    if (c.eoc_orders.empty()) c.eoc_orders = {c.order};
    if (c.eoc_nodes.empty()) {
      if (s == "soliton") c.eoc_nodes = {128, 256, 512};
      else if (reflecting_case) c.eoc_nodes = {65, 129, 257};
      else c.eoc_nodes = {64, 128, 256};
    }
    if (!std::is_sorted(c.eoc_nodes.begin(), c.eoc_nodes.end()) ||
        std::adjacent_find(c.eoc_nodes.begin(), c.eoc_nodes.end()) != c.eoc_nodes.end()) {
      throw ConfigError("eoc_nodes must be strictly increasing");
    }
    if (s != "soliton" && s != "manufactured") {
      throw ConfigError("convergence studies are available for soliton and manufactured only");
    }
  }
  if (s == "dingemans") {
    for (double x : c.gauges) {
      if (x < -138.0 || x > 46.0) throw ConfigError("gauge position outside the domain [-138, 46]");
    }
  } else if (!c.gauges.empty()) {
    throw ConfigError("gauges apply to the dingemans scenario only");
  }
  if (!c.experimental_data.empty() && s != "dingemans") {
    throw ConfigError("experimental_data applies to the dingemans scenario only");
  }
  return c;
}

}  // namespace dsw::scenarios
