#include "stsmc/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stsmc {

const char* controller_name(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::proposed:
      return "proposed";
    case ControllerKind::fosmflc:
      return "fosmflc";
    case ControllerKind::classical_smc:
      return "classical_smc";
  }
  throw std::logic_error("controller_name: unknown controller kind");
}

ControllerKind controller_from_name(const std::string& name) {
  if (name == "proposed") return ControllerKind::proposed;
  if (name == "fosmflc") return ControllerKind::fosmflc;
  if (name == "classical_smc") return ControllerKind::classical_smc;
  throw std::invalid_argument("unknown controller '" + name +
                              "' (expected proposed, fosmflc, or classical_smc)");
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.name.empty()) throw std::invalid_argument("scenario name must not be empty");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("scenario dt must be positive");
  if (!(cfg.duration >= 100.0 * cfg.dt))
    throw std::invalid_argument("scenario duration must cover at least 100 steps");
  if (!(cfg.vref > 0.0)) throw std::invalid_argument("scenario vref must be positive");
  if (!(cfg.edot_filter_tau >= 0.0))
    throw std::invalid_argument("edot_filter_tau must be nonnegative");
  validate(cfg.plant);
  validate(cfg.disturbances);
  if (cfg.event_time && !(*cfg.event_time >= 0.0 && *cfg.event_time <= cfg.duration))
    throw std::invalid_argument("event_time must lie within the run");
  switch (cfg.controller) {
    case ControllerKind::proposed:
      validate(cfg.adaptation);
      if (!(cfg.st.K1 > 0.0)) throw std::invalid_argument("supertwisting K1 must be positive");
      if (!(cfg.st.K2 >= 0.0)) throw std::invalid_argument("supertwisting K2 must be nonnegative");
      if (!(cfg.st.c > 0.0)) throw std::invalid_argument("surface slope c must be positive");
      if (!(cfg.st.u_min < cfg.st.u_max))
        throw std::invalid_argument("supertwisting duty bounds must satisfy u_min < u_max");
      break;
    case ControllerKind::fosmflc:
      validate(cfg.fosm);
      if (!(cfg.fosm.c > 0.0)) throw std::invalid_argument("surface slope c must be positive");
      break;
    case ControllerKind::classical_smc:
      if (!(cfg.classical.gain > 0.0))
        throw std::invalid_argument("classical smc gain must be positive");
      if (!(cfg.classical.c > 0.0)) throw std::invalid_argument("surface slope c must be positive");
      if (!(cfg.classical.u_min < cfg.classical.u_max))
        throw std::invalid_argument("classical smc duty bounds must satisfy u_min < u_max");
      break;
  }
}

namespace {

[[noreturn]] void throw_nonfinite(const ScenarioConfig& cfg, std::size_t step,
                                  const char* what) {
  throw std::runtime_error("scenario '" + cfg.name + "' produced a non-finite " + what +
                           " at step " + std::to_string(step));
}

}  // namespace

Trace run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);

  const std::size_t n = static_cast<std::size_t>(cfg.duration / cfg.dt) + 1;
  const double alpha = cfg.dt / (cfg.edot_filter_tau + cfg.dt);

  Trace trace;
  trace.rows.reserve(n);

  BuckState state;
  StState st_state;
  ErrorHistory hist;
  double e_prev = 0.0;
  double edf = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    const OperatingConditions cond = disturbance_at(cfg.disturbances, t, cfg.plant);

    const double e = cfg.vref - state.vC;
    const double ed_raw = (k == 0) ? 0.0 : (e - e_prev) / cfg.dt;
    edf += alpha * (ed_raw - edf);
    e_prev = e;

    double k_c = 1.0;
    double r_v = 0.0;
    double S = 0.0;
    double u = 0.0;
    switch (cfg.controller) {
      case ControllerKind::proposed: {
        const AdaptationDecision dec = adapt_step(e, hist, cfg.adaptation);
        k_c = dec.k_c;
        r_v = dec.r_v;
        const double c_eff = effective_slope(cfg.st.c, k_c);
        S = sliding_surface(e, edf, c_eff);
        u = st_step(S, cfg.dt, cfg.st, st_state);
        break;
      }
      case ControllerKind::fosmflc:
        S = sliding_surface(e, edf, cfg.fosm.c);
        u = fosmflc_step(S, cfg.fosm);
        break;
      case ControllerKind::classical_smc:
        S = sliding_surface(e, edf, cfg.classical.c);
        u = classical_smc_step(S, cfg.classical.gain, cfg.classical.d0, cfg.classical.u_min,
                               cfg.classical.u_max);
        break;
    }

    if (!std::isfinite(S)) throw_nonfinite(cfg, k, "sliding surface");
    if (!std::isfinite(u)) throw_nonfinite(cfg, k, "control");

    trace.rows.push_back({t, state.vC, state.iL, e, edf, S, u, k_c, r_v, cond.vin, cond.R});

    if (k + 1 < n) {
      state = rk4_step(state, u, cond.vin, cond.R, cfg.dt, cfg.plant);
      if (!std::isfinite(state.vC) || !std::isfinite(state.iL))
        throw_nonfinite(cfg, k + 1, "plant state");
    }
  }
  return trace;
}

}  // namespace stsmc
