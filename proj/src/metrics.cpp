#include "stsmc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsmc {

namespace {

// Index after the last out-of-band sample at or past `from`, or size() if the
// trace ends out of band, or `from` if it never leaves the band.
std::size_t band_entry_index(const Trace& tr, std::size_t from, double band_frac,
                             double ref) {
  const double band = band_frac * ref;
  std::size_t entry = from;
  for (std::size_t k = from; k < tr.size(); ++k) {
    if (std::abs(tr.rows[k].vC - ref) > band) entry = k + 1;
  }
  return entry;
}

}  // namespace

std::optional<double> settling_time(const Trace& tr, double band_frac, double ref) {
  if (!(band_frac > 0.0 && band_frac < 1.0)) {
    throw std::invalid_argument("settling_time needs band_frac in (0,1)");
  }
  if (tr.empty()) return std::nullopt;
  const std::size_t entry = band_entry_index(tr, 0, band_frac, ref);
  if (entry >= tr.size()) return std::nullopt;
  return tr.rows[entry].t;
}

double overshoot(const Trace& tr, double ref) {
  if (!(ref > 0.0)) {
    throw std::invalid_argument("overshoot needs ref > 0");
  }
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& r : tr.rows) peak = std::max(peak, r.vC);
  return std::max(0.0, (peak - ref) / ref * 100.0);
}

double steady_state_error(const Trace& tr, double ref, double tail_frac) {
  if (!(tail_frac > 0.0 && tail_frac < 1.0)) {
    throw std::invalid_argument("steady_state_error needs tail_frac in (0,1)");
  }
  const std::size_t n = tr.size();
  if (n == 0) return 0.0;
  const std::size_t count =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(tail_frac * n)));
  double sum = 0.0;
  for (std::size_t k = n - count; k < n; ++k) sum += ref - tr.rows[k].vC;
  return sum / static_cast<double>(count);
}

std::optional<double> rejection_time(const Trace& tr, double t_event,
                                     double band_frac, double ref) {
  if (tr.empty() || t_event < tr.rows.front().t || t_event > tr.rows.back().t) {
    throw std::invalid_argument("rejection_time: t_event outside the trace");
  }
  std::size_t from = 0;
  while (from < tr.size() && tr.rows[from].t < t_event) ++from;
  const std::size_t entry = band_entry_index(tr, from, band_frac, ref);
  if (entry >= tr.size()) return std::nullopt;
  if (entry == from) return 0.0;
  return tr.rows[entry].t - t_event;
}

double chattering_index(const Trace& tr, double window) {
  if (!(window > 0.0 && window <= 1.0)) {
    throw std::invalid_argument("chattering_index needs window in (0,1]");
  }
  const std::size_t n = tr.size();
  if (n < 2) return 0.0;
  const auto start = static_cast<std::size_t>(
      std::ceil((1.0 - window) * static_cast<double>(n - 1)));
  double tv = 0.0;
  for (std::size_t k = start; k + 1 < n; ++k) {
    tv += std::abs(tr.rows[k + 1].u - tr.rows[k].u);
  }
  return tv;
}

Metrics compute_metrics(const Trace& tr, double ref, const MetricsParams& mp,
                        std::optional<double> t_event) {
  Metrics m;
  m.settling_time_s = settling_time(tr, mp.band_frac, ref);
  m.overshoot_pct = overshoot(tr, ref);
  m.steady_state_error_v = steady_state_error(tr, ref, mp.tail_frac);
  if (t_event) m.rejection_time_s = rejection_time(tr, *t_event, mp.band_frac, ref);
  m.chattering_index = chattering_index(tr, mp.chatter_window);
  return m;
}

}  // namespace stsmc
