#ifndef STSMC_METRICS_HPP_
#define STSMC_METRICS_HPP_

#include <optional>

#include "stsmc/trace.hpp"

namespace stsmc {

/// Earliest t* such that |vC - ref| <= band_frac*ref for every t >= t*.
/// Empty if the band is never permanently entered.
std::optional<double> settling_time(const Trace& tr, double band_frac, double ref);

/// max(0, (max vC - ref)/ref * 100), percent over the whole trace.
double overshoot(const Trace& tr, double ref);

/// Mean of (ref - vC) over the final tail_frac of the trace, volts.
double steady_state_error(const Trace& tr, double ref, double tail_frac);

/// Time from t_event until |vC - ref| <= band_frac*ref holds for all
/// remaining samples; 0 if the band is never left after the event; empty if
/// it is never permanently re-entered.
std::optional<double> rejection_time(const Trace& tr, double t_event,
                                     double band_frac, double ref);

/// Total variation of the control signal over the final `window` fraction of
/// the trace.
double chattering_index(const Trace& tr, double window);

struct Metrics {
  std::optional<double> settling_time_s;
  double overshoot_pct = 0.0;
  double steady_state_error_v = 0.0;
  std::optional<double> rejection_time_s;  // only for scenarios with an event
  double chattering_index = 0.0;
};

struct MetricsParams {
  double band_frac = 0.05;
  double tail_frac = 0.1;
  double chatter_window = 0.2;
};

Metrics compute_metrics(const Trace& tr, double ref, const MetricsParams& mp,
                        std::optional<double> t_event);

}  // namespace stsmc

#endif  // STSMC_METRICS_HPP_
