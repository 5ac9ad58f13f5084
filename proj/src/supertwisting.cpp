#include "stsmc/supertwisting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsmc {

namespace {
double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

double effective_slope(double c, double k_c) {
  if (!(c > 0.0) || !(k_c > 0.0)) {
    throw std::invalid_argument("effective_slope needs c > 0 and k_c > 0");
  }
  return k_c * c;
}

double sliding_surface(double e, double edot, double c_eff) {
  return edot + c_eff * e;
}

StTerms st_correction_terms(double S) {
  const double s = sign(S);
  return {std::sqrt(std::abs(S)) * s, 0.5 * s};
}

double st_step(double S, double dt, const StGains& gains, StState& state) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("st_step needs dt > 0");
  }
  const StTerms t = st_correction_terms(S);

  const double dz = gains.direction * gains.K2 * t.phi2 * dt;
  const bool deepens = (state.sat_hi && dz > 0.0) || (state.sat_lo && dz < 0.0);
  if (!deepens) state.z += dz;

  const double raw = gains.d0 + gains.direction * gains.K1 * t.phi1 + state.z;
  state.sat_hi = raw > gains.u_max;
  state.sat_lo = raw < gains.u_min;
  return std::clamp(raw, gains.u_min, gains.u_max);
}

}  // namespace stsmc
