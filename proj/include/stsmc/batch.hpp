#ifndef STSMC_BATCH_HPP_
#define STSMC_BATCH_HPP_

#include <string>
#include <vector>

#include "stsmc/config.hpp"
#include "stsmc/metrics.hpp"
#include "stsmc/scenario.hpp"

namespace stsmc {

struct RunRequest {
  std::string scenario;
  ControllerKind controller = ControllerKind::proposed;
};

struct RunResult {
  std::string scenario;
  ControllerKind controller = ControllerKind::proposed;
  Trace trace;
  Metrics metrics;
};

/// Expands the cross product of the requested scenario names ("all" for the
/// whole catalog) and one controller.
std::vector<RunRequest> expand_requests(const HarnessConfig& cfg,
                                        const std::string& scenario,
                                        ControllerKind controller);

/// Runs every request in order, one after another. Reference implementation;
/// results are positionally matched to the requests.
std::vector<RunResult> run_batch_serial(const HarnessConfig& cfg,
                                        const std::vector<RunRequest>& requests);

/// Same contract as run_batch_serial with the independent runs distributed
/// across OpenMP threads. Falls back to the serial path when built without
/// OpenMP. Result order is identical to the serial runner's.
std::vector<RunResult> run_batch_parallel(const HarnessConfig& cfg,
                                          const std::vector<RunRequest>& requests);

/// CSV with header scenario,controller,settling_time_s,overshoot_pct,
/// steady_state_error_v,rejection_time_s,chattering_index and one row per
/// result. Metrics that do not exist for a run are written as `absent`.
/// Throws std::runtime_error naming the path on I/O failure.
void write_metrics_summary(const std::vector<RunResult>& results,
                           const std::string& path);

}  // namespace stsmc

#endif  // STSMC_BATCH_HPP_
