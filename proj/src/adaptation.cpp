#include "stsmc/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsmc {

ErrorDeltas push_error(double e_k, ErrorHistory& h) {
  ErrorDeltas out;
  const double de_k = e_k - h.e_prev;
  const double dde_k = de_k - h.de_prev;
  h.samples_seen += 1;
  out.warm = h.samples_seen >= 3;
  if (out.warm) {
    out.de = de_k;
    out.dde = dde_k;
  }
  // History keeps the raw increments even through warm-up, so the first warm
  // sample sees the true de(k-1).
  if (h.samples_seen >= 2) h.de_prev = de_k;
  h.e_prev = e_k;
  return out;
}

double normalized_acceleration(double de_k, double de_km1) {
  const double dde = de_k - de_km1;
  const double denom = std::abs(de_k) >= std::abs(de_km1) ? de_k : de_km1;
  if (denom == 0.0) return 0.0;
  return std::clamp(dde / denom, -1.0, 1.0);
}

void validate(const AdaptationConfig& cfg) {
  validate(cfg.fis);
  if (!(cfg.e_norm_scale > 0.0)) {
    throw std::invalid_argument("e_norm_scale must be positive");
  }
  if (!(0.0 < cfg.kc_min && cfg.kc_min <= 1.0 && 1.0 <= cfg.kc_max)) {
    throw std::invalid_argument("need 0 < kc_min <= 1 <= kc_max");
  }
}

double coefficient_factor(double e_k, double r_v, const AdaptationConfig& cfg) {
  const double e_norm = std::clamp(std::abs(e_k) / cfg.e_norm_scale, 0.0, 1.0);
  const double k_c = mamdani_evaluate(e_norm, r_v, cfg.fis);
  return std::clamp(k_c, cfg.kc_min, cfg.kc_max);
}

AdaptationDecision adapt_step(double e_k, ErrorHistory& h,
                              const AdaptationConfig& cfg) {
  const double de_km1 = h.de_prev;
  const ErrorDeltas d = push_error(e_k, h);
  AdaptationDecision out;
  out.de = d.de;
  out.dde = d.dde;
  out.warm = d.warm;
  if (d.warm) {
    out.r_v = normalized_acceleration(d.de, de_km1);
    out.k_c = coefficient_factor(e_k, out.r_v, cfg);
  }
  return out;
}

}  // namespace stsmc
