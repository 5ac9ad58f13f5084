#include "stsmc/adaptation.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using namespace stsmc;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

AdaptationConfig small_config() {
  AdaptationConfig cfg;
  cfg.fis.in1 = make_uniform_partition({"S", "L"}, 0.0, 1.0);
  cfg.fis.in2 = make_uniform_partition({"N", "P"}, -1.0, 1.0);
  cfg.fis.out = make_uniform_partition({"LO", "HI"}, 0.2, 1.8);
  cfg.fis.rules.row_labels = {"S", "L"};
  cfg.fis.rules.col_labels = {"N", "P"};
  cfg.fis.rules.entries = {"HI", "LO", "HI", "LO"};
  cfg.e_norm_scale = 12.0;
  return cfg;
}

}  // namespace

TEST_CASE("error deltas stay zero until the third sample") {
  ErrorHistory h;
  auto d1 = push_error(5.0, h);
  CHECK_FALSE(d1.warm);
  CHECK(d1.de == 0.0);
  CHECK(d1.dde == 0.0);

  auto d2 = push_error(3.0, h);
  CHECK_FALSE(d2.warm);
  CHECK(d2.de == 0.0);

  auto d3 = push_error(2.0, h);
  CHECK(d3.warm);
  CHECK(d3.de == doctest::Approx(-1.0));
  CHECK(d3.dde == doctest::Approx(1.0));  // -1 - (-2)

  auto d4 = push_error(2.5, h);
  CHECK(d4.de == doctest::Approx(0.5));
  CHECK(d4.dde == doctest::Approx(1.5));
}

TEST_CASE("normalized acceleration divides by the larger recent increment") {
  CHECK(normalized_acceleration(2.0, 1.0) == doctest::Approx(0.5));
  CHECK(normalized_acceleration(1.0, 1.0) == 0.0);
  CHECK(normalized_acceleration(-2.0, -1.0) == doctest::Approx(0.5));
  CHECK(normalized_acceleration(-1.0, -2.0) == doctest::Approx(-0.5));
  CHECK(normalized_acceleration(0.0, 0.0) == 0.0);
  // Opposite-sign increments would overshoot the unit range; the clamp holds.
  CHECK(normalized_acceleration(1.0, -1.0) == 1.0);
  CHECK(normalized_acceleration(-1.0, 1.0) == 1.0);  // dde/denom = -2/-1 -> clamped
}

TEST_CASE("sign quadrants classify speeding up vs slowing down") {
  // |de| growing  -> positive (response accelerating)
  CHECK(normalized_acceleration(-3.0, -2.0) > 0.0);
  CHECK(normalized_acceleration(3.0, 2.0) > 0.0);
  // |de| shrinking -> negative (response decelerating)
  CHECK(normalized_acceleration(-1.0, -2.0) < 0.0);
  CHECK(normalized_acceleration(1.0, 2.0) < 0.0);
}

TEST_CASE("same-sign increments never need the clamp") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const double a = uniform01(rng) * 10.0 + 1e-9;
    const double b = uniform01(rng) * 10.0 + 1e-9;
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    const double de_k = sign * a;
    const double de_km1 = sign * b;
    const double dde = de_k - de_km1;
    const double denom = std::abs(de_k) >= std::abs(de_km1) ? de_k : de_km1;
    REQUIRE(std::abs(dde / denom) <= 1.0 + 1e-12);
    REQUIRE(normalized_acceleration(de_k, de_km1) == doctest::Approx(dde / denom));
  }
}

TEST_CASE("geometric error decay gives r_v = ratio - 1") {
  // e(k) = 12 * 0.9^k: increments shrink by the same ratio each step, so the
  // normalized acceleration settles at 0.9 - 1 = -0.1.
  ErrorHistory h;
  AdaptationConfig cfg = small_config();
  double e = 12.0;
  AdaptationDecision last;
  for (int k = 0; k < 40; ++k) {
    last = adapt_step(e, h, cfg);
    e *= 0.9;
  }
  CHECK(last.warm);
  CHECK(last.r_v == doctest::Approx(-0.1).epsilon(1e-9));
}

TEST_CASE("adaptation validation rejects bad scale and bounds") {
  auto cfg = small_config();
  CHECK_NOTHROW(validate(cfg));
  auto bad_scale = cfg;
  bad_scale.e_norm_scale = 0.0;
  CHECK_THROWS_AS(validate(bad_scale), std::invalid_argument);
  auto bad_bounds = cfg;
  bad_bounds.kc_min = 1.2;  // must not exceed 1
  CHECK_THROWS_AS(validate(bad_bounds), std::invalid_argument);
}

TEST_CASE("coefficient factor feeds |e|/scale and r_v through the rule table") {
  const auto cfg = small_config();
  // e = 0 -> row S exactly; r_v = -1 -> column N exactly; rule (S,N) -> HI.
  CHECK(coefficient_factor(0.0, -1.0, cfg) == doctest::Approx(1.8));
  CHECK(coefficient_factor(0.0, 1.0, cfg) == doctest::Approx(0.2));
  // Sign of e is irrelevant, only the magnitude enters.
  CHECK(coefficient_factor(-12.0, -1.0, cfg) == doctest::Approx(coefficient_factor(12.0, -1.0, cfg)));
  // |e| far beyond the scale clamps to the top row.
  CHECK(coefficient_factor(500.0, -1.0, cfg) == doctest::Approx(coefficient_factor(12.0, -1.0, cfg)));
}

TEST_CASE("coefficient factor is clamped to the configured band") {
  auto cfg = small_config();
  cfg.kc_min = 0.5;
  cfg.kc_max = 1.5;
  CHECK(coefficient_factor(0.0, -1.0, cfg) == doctest::Approx(1.5));
  CHECK(coefficient_factor(0.0, 1.0, cfg) == doctest::Approx(0.5));
}

TEST_CASE("adapt_step holds k_c at 1 until warm then follows the table") {
  const auto cfg = small_config();
  ErrorHistory h;
  auto d1 = adapt_step(12.0, h, cfg);
  CHECK_FALSE(d1.warm);
  CHECK(d1.k_c == 1.0);
  CHECK(d1.r_v == 0.0);
  auto d2 = adapt_step(10.0, h, cfg);
  CHECK(d2.k_c == 1.0);
  auto d3 = adapt_step(9.0, h, cfg);
  CHECK(d3.warm);
  // de = -1, previous de = -2: shrinking increments, r_v = 1/2.
  CHECK(d3.r_v == doctest::Approx(-0.5));
  CHECK(d3.k_c == doctest::Approx(coefficient_factor(9.0, -0.5, cfg)));
}

TEST_CASE("k_c stays inside its band for arbitrary error streams") {
  const auto cfg = small_config();
  ErrorHistory h;
  std::mt19937_64 rng(99);
  for (int k = 0; k < 5000; ++k) {
    const double e = (uniform01(rng) - 0.5) * 40.0;
    const auto d = adapt_step(e, h, cfg);
    REQUIRE(d.k_c >= cfg.kc_min);
    REQUIRE(d.k_c <= cfg.kc_max);
    REQUIRE(std::abs(d.r_v) <= 1.0);
  }
}
