#ifndef STSMC_ADAPTATION_HPP_
#define STSMC_ADAPTATION_HPP_

#include "stsmc/fuzzy.hpp"

namespace stsmc {

/// Sliding window over the error signal. de/dde need two and three samples
/// respectively, so results are flagged as warm only from the third push on.
struct ErrorHistory {
  double e_prev = 0.0;
  double de_prev = 0.0;
  int samples_seen = 0;
};

struct ErrorDeltas {
  double de = 0.0;   // e(k) - e(k-1)
  double dde = 0.0;  // de(k) - de(k-1)
  bool warm = false;
};

/// Pushes one error sample and returns the incremental error and error
/// acceleration. Both are reported as 0 until three samples have been seen.
ErrorDeltas push_error(double e_k, ErrorHistory& h);

/// Second difference of the error normalized by the larger-magnitude recent
/// first difference, clamped to [-1, 1]. Returns 0 when that difference is 0.
/// Positive means the response is speeding up, negative slowing down.
double normalized_acceleration(double de_k, double de_km1);

struct AdaptationConfig {
  FisConfig fis;             // the coefficient-factor rule system
  double e_norm_scale = 1.0; // volts; |e| is divided by this before fuzzifying
  double kc_min = 0.2;
  double kc_max = 1.8;
};

void validate(const AdaptationConfig& cfg);

/// Coefficient factor k_c from the fuzzy system evaluated at
/// (|e|/e_norm_scale clamped to [0,1], r_v), clamped to [kc_min, kc_max].
double coefficient_factor(double e_k, double r_v, const AdaptationConfig& cfg);

struct AdaptationDecision {
  double k_c = 1.0;
  double r_v = 0.0;
  double de = 0.0;
  double dde = 0.0;
  bool warm = false;
};

/// One control-period update: pushes e, derives r_v, evaluates k_c.
/// k_c stays at 1 (slope unchanged) until the history is warm.
AdaptationDecision adapt_step(double e_k, ErrorHistory& h,
                              const AdaptationConfig& cfg);

}  // namespace stsmc

#endif  // STSMC_ADAPTATION_HPP_
