#include "stsmc/batch.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <stdexcept>

namespace stsmc {

namespace {

RunResult run_one(const HarnessConfig& cfg, const RunRequest& req) {
  const ScenarioConfig sc = make_scenario(cfg, req.scenario, req.controller);
  RunResult res;
  res.scenario = req.scenario;
  res.controller = req.controller;
  res.trace = run_scenario(sc);
  res.metrics = compute_metrics(res.trace, sc.vref, cfg.metrics, sc.event_time);
  return res;
}

}  // namespace

std::vector<RunRequest> expand_requests(const HarnessConfig& cfg,
                                        const std::string& scenario,
                                        ControllerKind controller) {
  std::vector<RunRequest> requests;
  if (scenario == "all") {
    for (const ScenarioEntry& s : cfg.scenarios) requests.push_back({s.name, controller});
  } else {
    find_scenario(cfg, scenario);  // rejects unknown names early
    requests.push_back({scenario, controller});
  }
  return requests;
}

std::vector<RunResult> run_batch_serial(const HarnessConfig& cfg,
                                        const std::vector<RunRequest>& requests) {
  std::vector<RunResult> results(requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) results[i] = run_one(cfg, requests[i]);
  return results;
}

std::vector<RunResult> run_batch_parallel(const HarnessConfig& cfg,
                                          const std::vector<RunRequest>& requests) {
#ifdef _OPENMP
  std::vector<RunResult> results(requests.size());
  std::vector<std::exception_ptr> errors(requests.size());
  const long long count = static_cast<long long>(requests.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      results[static_cast<std::size_t>(i)] =
          run_one(cfg, requests[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
  return results;
#else
  return run_batch_serial(cfg, requests);
#endif
}

namespace {

void append_metric(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (!v) {
    line += "absent";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", *v);
  line += buf;
}

}  // namespace

void write_metrics_summary(const std::vector<RunResult>& results,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("write_metrics_summary: cannot open '" + path + "'");
  out << "scenario,controller,settling_time_s,overshoot_pct,steady_state_error_v,"
         "rejection_time_s,chattering_index\n";
  std::string line;
  for (const RunResult& r : results) {
    line = r.scenario;
    line += ',';
    line += controller_name(r.controller);
    append_metric(line, r.metrics.settling_time_s);
    append_metric(line, r.metrics.overshoot_pct);
    append_metric(line, r.metrics.steady_state_error_v);
    append_metric(line, r.metrics.rejection_time_s);
    append_metric(line, r.metrics.chattering_index);
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out)
    throw std::runtime_error("write_metrics_summary: write failed for '" + path + "'");
}

}  // namespace stsmc
