#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qbcap/closed_forms.hpp"
#include "qbcap/sweep.hpp"
#include "test_support.hpp"

using namespace qbcap;
using test::Rng;

namespace {

const Energies kEps = default_energies;

ChannelScenario scenario(StateSpec state, Topology topology, ChannelKind kind, int n = 1) {
  ChannelScenario s;
  s.state = state;
  s.topology = topology;
  s.kind = kind;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("1-D sweeps") {
  SUBCASE("first-subsystem damping is linear at every grid point") {
    const auto records = sweep_1d(
        scenario(StateSpec::ghz(), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
        GridSpec{0.0, 1.0, 201}, kEps);
    REQUIRE(records.size() == 201);
    for (const SweepRecord& r : records) {
      CHECK(std::abs(r.capacity_numeric - (1.8 - 0.2 * r.p)) <= 1e-9);
      REQUIRE(r.capacity_oracle.has_value());
      CHECK(*r.abs_err <= 1e-9);
      CHECK_FALSE(r.q.has_value());
    }
  }

  SUBCASE("three-sided depolarizing dies at 0.75") {
    const auto records =
        sweep_1d(scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::Depolarizing),
                 GridSpec{0.0, 1.0, 5}, kEps);
    CHECK(records[0].p == 0.0);
    CHECK(std::abs(records[0].capacity_numeric - 1.8) <= 1e-12);
    CHECK(records[3].p == 0.75);
    CHECK(std::abs(records[3].capacity_numeric) <= 1e-9);
  }

  SUBCASE("grid with fewer than two points is rejected") {
    CHECK_THROWS_AS(
        sweep_1d(scenario(StateSpec::ghz(), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
                 GridSpec{0.0, 1.0, 1}, kEps),
        std::invalid_argument);
  }
}

TEST_CASE("2-D sweeps") {
  SUBCASE("frozen surface at gamma = 1/2") {
    ChannelScenario s = scenario(StateSpec::ghz(), Topology::TriSide, ChannelKind::PhaseFlip);
    s.gamma = 0.5;
    const auto records = sweep_2d(s, GridSpec{0.0, 1.0, 11}, GridSpec{0.0, 1.0, 11}, kEps);
    REQUIRE(records.size() == 121);
    for (const SweepRecord& r : records) {
      CHECK(std::abs(r.capacity_numeric - 1.6) <= 1e-9);
      REQUIRE(r.q.has_value());
      REQUIRE(r.abs_err.has_value());
      CHECK(*r.abs_err <= 1e-9);
    }
    // row-major ordering: p is the slow axis
    CHECK(records[0].p == 0.0);
    CHECK(*records[1].q > *records[0].q);
    CHECK(records[11].p > records[10].p);
  }

  SUBCASE("ghz-like frozen surface sits at 1.7") {
    ChannelScenario s =
        scenario(StateSpec::ghz_like(0.5), Topology::TriSide, ChannelKind::PhaseFlip, 3);
    s.gamma = 0.5;
    const auto records = sweep_2d(s, GridSpec{0.0, 1.0, 7}, GridSpec{0.0, 1.0, 7}, kEps);
    for (const SweepRecord& r : records) CHECK(std::abs(r.capacity_numeric - 1.7) <= 1e-9);
  }

  SUBCASE("full gamma with centered strengths still hits 1.6") {
    ChannelScenario s = scenario(StateSpec::ghz(), Topology::TriSide, ChannelKind::PhaseFlip);
    s.gamma = 1.0;
    const auto records = sweep_2d(s, GridSpec{0.5, 0.5, 2}, GridSpec{0.5, 0.5, 2}, kEps);
    for (const SweepRecord& r : records) CHECK(std::abs(r.capacity_numeric - 1.6) <= 1e-9);
  }

  SUBCASE("only tri-side scenarios are accepted") {
    CHECK_THROWS_AS(
        sweep_2d(scenario(StateSpec::ghz(), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
                 GridSpec{}, GridSpec{}, kEps),
        std::invalid_argument);
  }
}

TEST_CASE("sudden death detection") {
  SUBCASE("bpf dies exactly once, at one half") {
    const ChannelScenario s =
        scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::BitPhaseFlip);
    const auto records = sweep_1d(s, GridSpec{0.0, 1.0, 201}, kEps);
    const auto points = find_sudden_death(records, 1e-6, capacity_curve(s, kEps));
    REQUIRE(points.size() == 1);
    CHECK(std::abs(points[0] - 0.5) <= 1e-9);
  }

  SUBCASE("dep dies exactly once, at three quarters") {
    const ChannelScenario s =
        scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::Depolarizing);
    const auto records = sweep_1d(s, GridSpec{0.0, 1.0, 201}, kEps);
    const auto points = find_sudden_death(records, 1e-6, capacity_curve(s, kEps));
    REQUIRE(points.size() == 1);
    CHECK(std::abs(points[0] - 0.75) <= 1e-9);
  }

  SUBCASE("monotone decay has no isolated zero") {
    const auto records = sweep_1d(
        scenario(StateSpec::ghz(), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
        GridSpec{0.0, 1.0, 201}, kEps);
    CHECK(find_sudden_death(records, 1e-6).empty());
  }

  SUBCASE("strictly positive curves report nothing") {
    const auto records =
        sweep_1d(scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::PhaseFlip),
                 GridSpec{0.0, 1.0, 201}, kEps);
    CHECK(find_sudden_death(records, 1e-6).empty());
  }

  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(find_sudden_death(std::vector<SweepRecord>{}, 1e-6), std::invalid_argument);
  }
}

TEST_CASE("frozen capacity detection") {
  SUBCASE("heavy dephasing freezes at 1.6 well before half strength") {
    const auto records =
        sweep_1d(scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::Dephasing, 100),
                 GridSpec{0.0, 1.0, 1001}, kEps);
    const auto frozen = detect_frozen(records, 1e-3, 10);
    REQUIRE(frozen.has_value());
    CHECK(std::abs(frozen->frozen_value - 1.6) <= 1e-9);
    CHECK(frozen->onset_p < 0.5);
    // independent: onset is the first grid point whose closed-form distance
    // from the terminal value stays within the tolerance
    double expected_onset = 1.0;
    for (int i = 1000; i >= 0; --i) {
      const double p = i / 1000.0;
      const double dist =
          std::abs(closed_form::ghz_capacity_n(ChannelKind::Dephasing, p, 100, kEps) - 1.6);
      if (dist <= 1e-3)
        expected_onset = p;
      else
        break;
    }
    CHECK(std::abs(frozen->onset_p - expected_onset) <= 1e-12);
  }

  SUBCASE("linear decay only flattens at the very end") {
    const auto records = sweep_1d(
        scenario(StateSpec::ghz(), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
        GridSpec{0.0, 1.0, 1001}, kEps);
    const auto frozen = detect_frozen(records, 1e-3, 5);
    REQUIRE(frozen.has_value());
    CHECK(std::abs(frozen->frozen_value - 1.6) <= 1e-9);
    CHECK(std::abs(frozen->onset_p - 0.995) <= 1e-3 + 1e-9);
  }

  SUBCASE("a flat curve is frozen from the start") {
    ChannelScenario s = scenario(StateSpec::ghz(), Topology::TriSide, ChannelKind::PhaseFlip);
    s.gamma = 0.5;
    s.q = 0.3;
    const auto records = sweep_1d(s, GridSpec{0.0, 1.0, 101}, kEps);
    const auto frozen = detect_frozen(records, 1e-3, 10);
    REQUIRE(frozen.has_value());
    CHECK(frozen->onset_p == 0.0);
    CHECK(std::abs(frozen->frozen_value - 1.6) <= 1e-9);
  }

  SUBCASE("loosening the tolerance never delays the onset") {
    const auto records =
        sweep_1d(scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::Dephasing, 3),
                 GridSpec{0.0, 1.0, 501}, kEps);
    double previous = 1.0;
    for (double tol : {1e-4, 1e-3, 1e-2, 1e-1}) {
      const auto frozen = detect_frozen(records, tol, 5);
      REQUIRE(frozen.has_value());
      CHECK(frozen->onset_p <= previous + 1e-15);
      previous = frozen->onset_p;
    }
  }

  SUBCASE("short tails and bad windows") {
    const auto records =
        sweep_1d(scenario(StateSpec::ghz(), Topology::ProductAllThree, ChannelKind::PhaseFlip),
                 GridSpec{0.0, 1.0, 101}, kEps);
    // recovery climbs right up to the last grid step, so only a tiny suffix
    // is flat; a wide window refuses to call it frozen
    CHECK_FALSE(detect_frozen(records, 1e-3, 10).has_value());
    CHECK_THROWS_AS(detect_frozen(records, 1e-3, 0), std::invalid_argument);
    CHECK_THROWS_AS(detect_frozen(records, 1e-3, 101), std::invalid_argument);
  }
}

TEST_CASE("eigenvalue crossing") {
  SUBCASE("single pass at a^2 = 0.25 crosses at two thirds") {
    const auto x = find_crossing(0.5, 1, 1e-12);
    REQUIRE(x.has_value());
    CHECK(std::abs(*x - 2.0 / 3.0) <= 1e-9);
    const auto ev = closed_form::ghz_like_adc_eigenvalues(0.5, *x, 1);
    CHECK(std::abs(ev.lambda5 - ev.lambda7) <= 1e-12);
  }

  SUBCASE("heavy amplitude keeps the order, no crossing") {
    CHECK_FALSE(find_crossing(std::sqrt(0.75), 1, 1e-12).has_value());
    CHECK_FALSE(find_crossing(1.0, 1, 1e-12).has_value());
  }

  SUBCASE("two passes, against the inverted decay relation and a grid scan") {
    const auto x = find_crossing(0.5, 2, 1e-12);
    REQUIRE(x.has_value());
    // lambda5 = lambda7 when (1-p)^n = (c3 - c1) / (2 c3) = 1/3
    const double analytic = 1.0 - std::sqrt(1.0 / 3.0);
    CHECK(std::abs(*x - analytic) <= 1e-9);

    double bracket_lo = 0.0, bracket_hi = 1.0;  // coarse scan for the sign change
    for (int i = 0; i < 1000; ++i) {
      const double p0 = i / 1000.0, p1 = (i + 1) / 1000.0;
      const auto e0 = closed_form::ghz_like_adc_eigenvalues(0.5, p0, 2);
      const auto e1 = closed_form::ghz_like_adc_eigenvalues(0.5, p1, 2);
      if ((e0.lambda5 - e0.lambda7) < 0.0 && (e1.lambda5 - e1.lambda7) >= 0.0) {
        bracket_lo = p0;
        bracket_hi = p1;
        break;
      }
    }
    CHECK(*x >= bracket_lo);
    CHECK(*x <= bracket_hi);
  }

  SUBCASE("branch capacities agree at the root") {
    for (int n : {1, 2, 5}) {
      const auto x = find_crossing(0.5, n, 1e-12);
      REQUIRE(x.has_value());
      const auto ev = closed_form::ghz_like_adc_eigenvalues(0.5, *x, n);
      const double low = 2.0 * ev.lambda7 * 0.9 + 2.0 * ev.lambda5 * 0.7;
      const double high = 2.0 * ev.lambda5 * 0.9 + 2.0 * ev.lambda7 * 0.7;
      CHECK(std::abs(low - high) <= 1e-9);
    }
  }

  SUBCASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(find_crossing(0.5, 0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(find_crossing(0.5, 1, 0.0), std::invalid_argument);
  }
}

TEST_CASE("feature scans") {
  SUBCASE("bpf reports its isolated zero") {
    const FeatureReport report =
        scan_features(scenario(StateSpec::ghz(), Topology::ProductAllThree,
                               ChannelKind::BitPhaseFlip),
                      GridSpec{0.0, 1.0, 201}, kEps, 1e-6, 1e-3, 10);
    REQUIRE(report.sudden_death_points.size() == 1);
    CHECK(std::abs(report.sudden_death_points[0] - 0.5) <= 1e-9);
    CHECK_FALSE(report.crossing_x.has_value());
  }

  SUBCASE("damped ghz-like reports its crossing") {
    const FeatureReport report = scan_features(
        scenario(StateSpec::ghz_like(0.5), Topology::FirstOnly, ChannelKind::AmplitudeDamping),
        GridSpec{0.0, 1.0, 201}, kEps, 1e-6, 1e-3, 10);
    REQUIRE(report.crossing_x.has_value());
    CHECK(std::abs(*report.crossing_x - 2.0 / 3.0) <= 1e-9);
    CHECK(report.sudden_death_points.empty());
  }

  SUBCASE("heavy dephasing reports frozen capacity") {
    const FeatureReport report =
        scan_features(scenario(StateSpec::ghz(), Topology::ProductAllThree,
                               ChannelKind::Dephasing, 100),
                      GridSpec{0.0, 1.0, 201}, kEps, 1e-6, 1e-3, 10);
    REQUIRE(report.frozen_value.has_value());
    CHECK(std::abs(*report.frozen_value - 1.6) <= 1e-9);
    REQUIRE(report.frozen_onset.has_value());
    CHECK(*report.frozen_onset < 0.5);
  }
}
