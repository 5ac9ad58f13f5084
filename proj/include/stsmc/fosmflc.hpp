#ifndef STSMC_FOSMFLC_HPP_
#define STSMC_FOSMFLC_HPP_

#include "stsmc/fuzzy.hpp"

namespace stsmc {

/// Single-input single-output first-order sliding-mode fuzzy controller:
/// seven triangular sets on [-1, 1] for input and output, identity rule
/// pairing (set i fires set i). The correction reduces to an odd, saturated
/// piecewise-linear map of S/s_scale.
struct FosmflcConfig {
  double c = 1.0;        // fixed surface slope, 1/s
  Partition in;          // 7 sets over [-1, 1]
  Partition out;         // 7 sets over [-1, 1]
  double s_scale = 1.0;  // normalizes S before fuzzification
  double output_gain = 1.0;
  double u_min = 0.0;
  double u_max = 1.0;
  double d0 = 0.0;
};

/// The conventional seven-label partition {NB, NM, NS, ZE, PS, PM, PB}.
Partition make_seven_set_partition();

void validate(const FosmflcConfig& cfg);

/// clamp(d0 + output_gain * defuzzified identity-rule response, u_min, u_max).
double fosmflc_step(double S, const FosmflcConfig& cfg);

/// Sign-based first-order sliding mode law, used as the chattering
/// comparator: clamp(d0 + gain * sign(S), u_min, u_max), sign(0) = 0.
double classical_smc_step(double S, double gain, double d0, double u_min,
                          double u_max);

}  // namespace stsmc

#endif  // STSMC_FOSMFLC_HPP_
