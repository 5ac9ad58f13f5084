#include "stsmc/buck.hpp"

#include <cmath>
#include <stdexcept>

namespace stsmc {

void validate(const BuckParams& p) {
  if (!(p.vin_nominal > 0.0) || !(p.inductance > 0.0) ||
      !(p.capacitance > 0.0) || !(p.load_nominal > 0.0)) {
    throw std::invalid_argument("buck parameters must be strictly positive");
  }
}

BuckDerivatives buck_derivatives(const BuckState& s, double duty, double vin,
                                 double R, const BuckParams& p) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("buck_derivatives needs R > 0");
  }
  return {(duty * vin - s.vC) / p.inductance,
          (s.iL - s.vC / R) / p.capacitance};
}

BuckState rk4_step(const BuckState& s, double duty, double vin, double R,
                   double dt, const BuckParams& p) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("rk4_step needs dt > 0");
  }
  const auto f = [&](const BuckState& x) { return buck_derivatives(x, duty, vin, R, p); };

  const BuckDerivatives k1 = f(s);
  const BuckDerivatives k2 = f({s.iL + 0.5 * dt * k1.diL_dt, s.vC + 0.5 * dt * k1.dvC_dt});
  const BuckDerivatives k3 = f({s.iL + 0.5 * dt * k2.diL_dt, s.vC + 0.5 * dt * k2.dvC_dt});
  const BuckDerivatives k4 = f({s.iL + dt * k3.diL_dt, s.vC + dt * k3.dvC_dt});

  return {s.iL + dt / 6.0 * (k1.diL_dt + 2.0 * (k2.diL_dt + k3.diL_dt) + k4.diL_dt),
          s.vC + dt / 6.0 * (k1.dvC_dt + 2.0 * (k2.dvC_dt + k3.dvC_dt) + k4.dvC_dt)};
}

void validate(const DisturbanceSchedule& sched) {
  double last = -1.0;
  for (const auto& ev : sched.events) {
    if (ev.t < 0.0) {
      throw std::invalid_argument("disturbance event time must be nonnegative");
    }
    if (!(ev.t > last) && last >= 0.0) {
      throw std::invalid_argument("disturbance event times must be strictly increasing");
    }
    last = ev.t;
  }
}

OperatingConditions disturbance_at(const DisturbanceSchedule& sched, double t,
                                   const BuckParams& defaults) {
  OperatingConditions c{defaults.vin_nominal, defaults.load_nominal};
  for (const auto& ev : sched.events) {
    if (ev.t > t) break;
    if (ev.vin) c.vin = *ev.vin;
    if (ev.R) c.R = *ev.R;
  }
  return c;
}

}  // namespace stsmc
