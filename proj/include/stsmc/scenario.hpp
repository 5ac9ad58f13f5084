#ifndef STSMC_SCENARIO_HPP_
#define STSMC_SCENARIO_HPP_

#include <optional>
#include <string>

#include "stsmc/adaptation.hpp"
#include "stsmc/buck.hpp"
#include "stsmc/fosmflc.hpp"
#include "stsmc/supertwisting.hpp"
#include "stsmc/trace.hpp"

namespace stsmc {

enum class ControllerKind { proposed, fosmflc, classical_smc };

const char* controller_name(ControllerKind kind);
ControllerKind controller_from_name(const std::string& name);

struct ClassicalSmcConfig {
  double c = 1.0;
  double gain = 0.25;
  double u_min = 0.0;
  double u_max = 1.0;
  double d0 = 0.0;
};

/// Full description of one closed-loop run. Carries the settings of all
/// three controllers so any scenario can be run against any of them;
/// `controller` selects the active one.
struct ScenarioConfig {
  std::string name;
  ControllerKind controller = ControllerKind::proposed;
  double vref = 12.0;
  double duration = 0.01;  // seconds
  double dt = 1e-6;        // control and integration period
  BuckParams plant;
  DisturbanceSchedule disturbances;
  StGains st;
  AdaptationConfig adaptation;
  FosmflcConfig fosm;
  ClassicalSmcConfig classical;
  double edot_filter_tau = 1e-5;  // first-order low-pass on the raw edot
  std::optional<double> event_time;  // disturbance instant, for rejection_time
};

void validate(const ScenarioConfig& cfg);

/// Runs the closed loop: at each sample the active controller sees
/// e = vref - vC and a filtered backward-difference edot, produces a duty,
/// and the plant advances one RK4 step with that duty held. Deterministic:
/// identical configs produce identical traces. Throws std::runtime_error
/// naming the step index if the state or control goes non-finite.
Trace run_scenario(const ScenarioConfig& cfg);

}  // namespace stsmc

#endif  // STSMC_SCENARIO_HPP_
