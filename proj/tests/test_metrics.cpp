#include "stsmc/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace stsmc;

namespace {

Trace from_voltages(const std::vector<double>& vC, double dt = 1.0) {
  Trace tr;
  for (std::size_t k = 0; k < vC.size(); ++k) {
    TraceRecord r;
    r.t = static_cast<double>(k) * dt;
    r.vC = vC[k];
    tr.rows.push_back(r);
  }
  return tr;
}

Trace from_controls(const std::vector<double>& u) {
  Trace tr;
  for (std::size_t k = 0; k < u.size(); ++k) {
    TraceRecord r;
    r.t = static_cast<double>(k);
    r.u = u[k];
    tr.rows.push_back(r);
  }
  return tr;
}

}  // namespace

TEST_CASE("settling time of an exponential approach lands at tau*ln(20)") {
  const double tau = 1e-3;
  const double dt = 1e-5;
  std::vector<double> vC;
  for (int k = 0; k <= 1000; ++k) {
    vC.push_back(12.0 * (1.0 - std::exp(-k * dt / tau)));
  }
  const auto ts = settling_time(from_voltages(vC, dt), 0.05, 12.0);
  REQUIRE(ts.has_value());
  // First sample with 12*exp(-t/tau) <= 0.6 is k = ceil(tau*ln(20)/dt) = 300.
  CHECK(*ts == doctest::Approx(300 * dt).epsilon(1e-12));
}

TEST_CASE("settling time is empty when the band is never held") {
  CHECK_FALSE(settling_time(from_voltages({0.0, 1.0, 2.0}), 0.05, 12.0).has_value());
  // A late excursion cancels an earlier entry.
  CHECK_FALSE(settling_time(from_voltages({12.0, 12.0, 5.0}), 0.05, 12.0).has_value());
  CHECK_FALSE(settling_time(Trace{}, 0.05, 12.0).has_value());
  CHECK_THROWS_AS(settling_time(from_voltages({12.0}), 0.0, 12.0), std::invalid_argument);
}

TEST_CASE("a trace that stays in band settles at its first sample") {
  auto tr = from_voltages({11.8, 12.1, 12.0});
  const auto ts = settling_time(tr, 0.05, 12.0);
  REQUIRE(ts.has_value());
  CHECK(*ts == 0.0);
}

TEST_CASE("overshoot reports the peak above the reference in percent") {
  CHECK(overshoot(from_voltages({0.0, 13.02, 12.0}), 12.0) == doctest::Approx(8.5));
  CHECK(overshoot(from_voltages({0.0, 12.33, 12.0}), 12.0) == doctest::Approx(2.75));
  CHECK(overshoot(from_voltages({0.0, 11.5, 11.9}), 12.0) == 0.0);
  CHECK_THROWS_AS(overshoot(from_voltages({12.0}), 0.0), std::invalid_argument);
}

TEST_CASE("steady-state error averages ref - vC over the tail") {
  CHECK(steady_state_error(from_voltages({0.0, 5.0, 11.9, 11.9}), 12.0, 0.5) ==
        doctest::Approx(0.1));
  // floor(0.3 * 10) = 3 trailing samples: mean of {0.3, -0.3, 0.3}.
  auto tr = from_voltages({0, 0, 0, 0, 0, 0, 0, 11.7, 12.3, 11.7});
  CHECK(steady_state_error(tr, 12.0, 0.3) == doctest::Approx(0.1));
  CHECK_THROWS_AS(steady_state_error(tr, 12.0, 1.0), std::invalid_argument);
}

TEST_CASE("rejection time spans the event to the final band re-entry") {
  std::vector<double> vC(100, 12.0);
  for (int k = 50; k < 60; ++k) vC[k] = 10.0;
  const auto tr = from_voltages(vC);
  const auto rej = rejection_time(tr, 50.0, 0.05, 12.0);
  REQUIRE(rej.has_value());
  CHECK(*rej == doctest::Approx(10.0));
  // The dip before the event is someone else's problem.
  const auto late = rejection_time(tr, 70.0, 0.05, 12.0);
  REQUIRE(late.has_value());
  CHECK(*late == 0.0);
}

TEST_CASE("rejection time is zero without an excursion and empty without recovery") {
  std::vector<double> flat(100, 12.0);
  const auto none = rejection_time(from_voltages(flat), 50.0, 0.05, 12.0);
  REQUIRE(none.has_value());
  CHECK(*none == 0.0);

  std::vector<double> broken(100, 12.0);
  for (int k = 80; k < 100; ++k) broken[k] = 9.0;
  CHECK_FALSE(rejection_time(from_voltages(broken), 50.0, 0.05, 12.0).has_value());

  CHECK_THROWS_AS(rejection_time(from_voltages(flat), 200.0, 0.05, 12.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(rejection_time(from_voltages(flat), -1.0, 0.05, 12.0),
                  std::invalid_argument);
}

TEST_CASE("chattering index is the control's total variation over the window") {
  CHECK(chattering_index(from_controls(std::vector<double>(50, 0.6)), 0.2) == 0.0);

  std::vector<double> toggles;
  for (int k = 0; k < 21; ++k) toggles.push_back(k % 2 ? 0.75 : 0.25);
  CHECK(chattering_index(from_controls(toggles), 1.0) == doctest::Approx(10.0));

  std::vector<double> ramp;
  for (int k = 0; k <= 10; ++k) ramp.push_back(0.1 * k);
  CHECK(chattering_index(from_controls(ramp), 1.0) == doctest::Approx(1.0));
  // Only the final half contributes: 5 intervals of 0.1 each.
  CHECK(chattering_index(from_controls(ramp), 0.5) == doctest::Approx(0.5));

  CHECK(chattering_index(Trace{}, 0.2) == 0.0);
  CHECK_THROWS_AS(chattering_index(from_controls(ramp), 0.0), std::invalid_argument);
}

TEST_CASE("compute_metrics bundles the fields and gates rejection on the event") {
  std::vector<double> vC(100, 12.0);
  for (int k = 0; k < 10; ++k) vC[k] = k;  // start-up ramp
  for (int k = 50; k < 55; ++k) vC[k] = 13.5;
  auto tr = from_voltages(vC);
  for (auto& r : tr.rows) r.u = 0.6;
  MetricsParams mp;  // 5% band, 10% tail, 20% window

  const auto with_event = compute_metrics(tr, 12.0, mp, 50.0);
  REQUIRE(with_event.settling_time_s.has_value());
  CHECK(*with_event.settling_time_s == doctest::Approx(55.0));
  CHECK(with_event.overshoot_pct == doctest::Approx(12.5));
  CHECK(with_event.steady_state_error_v == doctest::Approx(0.0));
  REQUIRE(with_event.rejection_time_s.has_value());
  CHECK(*with_event.rejection_time_s == doctest::Approx(5.0));
  CHECK(with_event.chattering_index == 0.0);

  const auto no_event = compute_metrics(tr, 12.0, mp, std::nullopt);
  CHECK_FALSE(no_event.rejection_time_s.has_value());
}
