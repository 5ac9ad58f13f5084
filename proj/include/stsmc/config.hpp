#ifndef STSMC_CONFIG_HPP_
#define STSMC_CONFIG_HPP_

#include <string>
#include <vector>

#include "stsmc/metrics.hpp"
#include "stsmc/scenario.hpp"

namespace stsmc {

struct ScenarioEntry {
  std::string name;
  DisturbanceSchedule disturbances;
};

/// Everything the simulator needs, as loaded from one JSON file: the plant,
/// the three controller configurations, metric parameters, and the scenario
/// catalog. A scenario entry only carries its disturbance schedule; gains and
/// plant parameters are shared across the catalog.
struct HarnessConfig {
  BuckParams plant;
  double vref = 12.0;
  double dt = 1e-6;
  double duration = 0.01;
  double edot_filter_tau = 1e-5;
  MetricsParams metrics;
  StGains st;
  AdaptationConfig adaptation;
  FosmflcConfig fosm;
  ClassicalSmcConfig classical;
  std::vector<ScenarioEntry> scenarios;
};

/// Parses JSON text. `origin` names the source in error messages.
/// Throws std::runtime_error on malformed JSON or missing/invalid fields.
HarnessConfig parse_config(const std::string& text, const std::string& origin);

/// Reads and parses a JSON config file.
HarnessConfig load_config(const std::string& path);

std::vector<std::string> scenario_names(const HarnessConfig& cfg);

/// Throws std::invalid_argument if the name is not in the catalog.
const ScenarioEntry& find_scenario(const HarnessConfig& cfg, const std::string& name);

/// Assembles a runnable ScenarioConfig for one catalog entry and controller.
/// The rejection-time event is the entry's first disturbance that fires
/// after t = 0 (events at t = 0 set initial conditions, not disturbances).
ScenarioConfig make_scenario(const HarnessConfig& cfg, const std::string& name,
                             ControllerKind controller);

}  // namespace stsmc

#endif  // STSMC_CONFIG_HPP_
