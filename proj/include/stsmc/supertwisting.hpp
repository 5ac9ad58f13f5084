#ifndef STSMC_SUPERTWISTING_HPP_
#define STSMC_SUPERTWISTING_HPP_

namespace stsmc {

/// Gains and actuator limits for the discrete super-twisting law.
/// direction = -1 gives the literal reaching law plus feedforward;
/// +1 flips the correction sign for plants whose surface responds
/// negatively to the actuator (the buck with e defined as r - y).
struct StGains {
  double K1 = 0.0;
  double K2 = 0.0;
  double c = 1.0;          // predetermined surface slope, 1/s
  double direction = 1.0;  // +1 or -1
  double u_min = 0.0;
  double u_max = 1.0;
  double d0 = 0.0;         // feedforward duty
};

/// Per-loop controller state: the integral accumulator plus the previous
/// step's saturation status driving conditional-integration anti-windup.
struct StState {
  double z = 0.0;
  bool sat_hi = false;
  bool sat_lo = false;
};

/// k_c * c. Throws std::invalid_argument on nonpositive inputs.
double effective_slope(double c, double k_c);

/// S = edot + c_eff * e.
double sliding_surface(double e, double edot, double c_eff);

struct StTerms {
  double phi1 = 0.0;  // |S|^(1/2) * sign(S)
  double phi2 = 0.0;  // 0.5 * sign(S)
};

/// sign(0) = 0, keeping the control continuous through S = 0.
StTerms st_correction_terms(double S);

/// One control period: integrates the switching term by explicit Euler
/// (frozen while the previous output was saturated in the same direction),
/// then returns clamp(d0 + direction*K1*phi1(S) + z, u_min, u_max).
/// Throws std::invalid_argument if dt <= 0.
double st_step(double S, double dt, const StGains& gains, StState& state);

}  // namespace stsmc

#endif  // STSMC_SUPERTWISTING_HPP_
