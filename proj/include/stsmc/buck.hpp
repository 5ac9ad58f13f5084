#ifndef STSMC_BUCK_HPP_
#define STSMC_BUCK_HPP_

#include <optional>
#include <vector>

namespace stsmc {

struct BuckParams {
  double vin_nominal = 20.0;  // volts
  double inductance = 100e-6; // henries
  double capacitance = 100e-6;// farads
  double load_nominal = 10.0; // ohms
};

void validate(const BuckParams& p);

/// Averaged continuous-conduction state: inductor current and capacitor
/// (output) voltage. iL may go negative (ideal synchronous buck).
struct BuckState {
  double iL = 0.0;  // amperes
  double vC = 0.0;  // volts
};

struct BuckDerivatives {
  double diL_dt = 0.0;
  double dvC_dt = 0.0;
};

/// diL/dt = (duty*vin - vC)/L, dvC/dt = (iL - vC/R)/C.
/// R may be +infinity (open load). Throws std::invalid_argument if R <= 0.
BuckDerivatives buck_derivatives(const BuckState& s, double duty, double vin,
                                 double R, const BuckParams& p);

/// Classic 4-stage Runge-Kutta update with duty, vin, R held constant over
/// the step. Throws std::invalid_argument if dt <= 0.
BuckState rk4_step(const BuckState& s, double duty, double vin, double R,
                   double dt, const BuckParams& p);

/// One timed change of operating conditions. Unset fields leave the previous
/// value in place.
struct DisturbanceEvent {
  double t = 0.0;  // seconds
  std::optional<double> vin;
  std::optional<double> R;
};

struct DisturbanceSchedule {
  std::vector<DisturbanceEvent> events;
};

/// Throws std::invalid_argument unless event times are strictly increasing
/// and nonnegative.
void validate(const DisturbanceSchedule& sched);

struct OperatingConditions {
  double vin = 0.0;
  double R = 0.0;
};

/// Nominal values with every event at time <= t applied in order. An event
/// at exactly t is already in effect at t.
OperatingConditions disturbance_at(const DisturbanceSchedule& sched, double t,
                                   const BuckParams& defaults);

}  // namespace stsmc

#endif  // STSMC_BUCK_HPP_
