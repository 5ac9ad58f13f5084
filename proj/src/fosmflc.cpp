#include "stsmc/fosmflc.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsmc {

Partition make_seven_set_partition() {
  return make_uniform_partition({"NB", "NM", "NS", "ZE", "PS", "PM", "PB"},
                                -1.0, 1.0);
}

void validate(const FosmflcConfig& cfg) {
  if (cfg.in.size() != 7 || cfg.out.size() != 7) {
    throw std::invalid_argument("FOSMFLC partitions must have exactly 7 sets");
  }
  if (!(cfg.c > 0.0) || !(cfg.s_scale > 0.0) || !(cfg.output_gain > 0.0)) {
    throw std::invalid_argument("FOSMFLC c, s_scale, output_gain must be positive");
  }
  if (!(cfg.u_min < cfg.u_max)) {
    throw std::invalid_argument("FOSMFLC needs u_min < u_max");
  }
}

double fosmflc_step(double S, const FosmflcConfig& cfg) {
  const std::vector<double> mu = fuzzify(S / cfg.s_scale, cfg.in);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    num += mu[i] * cfg.out.sets[i].center;  // rule i -> i
    den += mu[i];
  }
  const double correction = num / den;
  return std::clamp(cfg.d0 + cfg.output_gain * correction, cfg.u_min, cfg.u_max);
}

double classical_smc_step(double S, double gain, double d0, double u_min,
                          double u_max) {
  if (!(gain > 0.0)) {
    throw std::invalid_argument("classical_smc_step needs gain > 0");
  }
  const double s = S > 0.0 ? 1.0 : (S < 0.0 ? -1.0 : 0.0);
  return std::clamp(d0 + gain * s, u_min, u_max);
}

}  // namespace stsmc
