#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "cranesite/instance_io.hpp"
#include "cranesite/kinematics.hpp"
#include "reference_values.hpp"

using namespace cranesite;
namespace ref = cranesite::testing;

namespace {

CraneSpec site_spec() {
  return CraneSpec{60.0, 53.3, 7.57, 0.25, 1.0, 1.92};
}

const Point3 kSupply2{83, 31, 2};
const Point3 kSupply5{55, 73, 1.5};
const Point3 kDemand1{34, 41, 15};
const Point3 kCrane8{70, 52, 30};

}  // namespace

TEST_CASE("radial distance ignores height") {
  CHECK(radial_distance({34, 41, 15}, {34, 41, 30}) == 0.0);
  CHECK(radial_distance({70, 52, 0}, {70, 55, 0}) == doctest::Approx(3.0));
  CHECK(radial_distance(kSupply2, kCrane8) == doctest::Approx(ref::kRhoSupply).epsilon(1e-14));
  CHECK(radial_distance(kDemand1, kCrane8) == doctest::Approx(ref::kRhoDemand).epsilon(1e-14));
}

TEST_CASE("chord distance") {
  CHECK(chord_distance({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(chord_distance({0, 0, 7}, {3, 4, 0}) == doctest::Approx(5.0));
  CHECK(chord_distance(kSupply5, kDemand1) ==
        doctest::Approx(ref::kChordSupply5Demand1).epsilon(1e-14));
}

TEST_CASE("radial time") {
  CHECK(radial_time(10, 10, 53.3) == 0.0);
  CHECK(radial_time(20, 10, 53.3) == doctest::Approx(10.0 / 53.3));
  CHECK(radial_time(20, 10, 53.3) == doctest::Approx(0.18762).epsilon(1e-4));
  CHECK(radial_time(ref::kRhoDemand, ref::kRhoSupply, 53.3) ==
        doctest::Approx(ref::kRadialTime).epsilon(1e-14));
}

TEST_CASE("slew time") {
  SUBCASE("collinear on the same side needs no slew") {
    CHECK(slew_time(10, 20, 10, 7.57) == 0.0);
  }
  SUBCASE("antipodal points slew through pi") {
    CHECK(slew_time(20, 10, 10, 7.57) == doctest::Approx(std::numbers::pi / 7.57));
    CHECK(slew_time(20, 10, 10, 7.57) == doctest::Approx(0.41502).epsilon(1e-4));
  }
  SUBCASE("hook at the mast") {
    CHECK(slew_time(5, 0.0, 5, 7.57) == 0.0);
    CHECK(slew_time(5, 5, 1e-12, 7.57) == 0.0);
  }
  SUBCASE("round-off beyond the unit interval is clamped") {
    // 3-4-7 is a degenerate triangle; rounding can push the cosine past -1.
    const double t = slew_time(7.0 + 1e-12, 3, 4, 1.0);
    CHECK_FALSE(std::isnan(t));
    CHECK(t == doctest::Approx(std::numbers::pi));
  }
  CHECK(slew_time(ref::kChord, ref::kRhoDemand, ref::kRhoSupply, 7.57) ==
        doctest::Approx(ref::kSlewTime).epsilon(1e-13));
}

TEST_CASE("horizontal and vertical times") {
  CHECK(horizontal_time(0.0, 0.4, 0.5) == doctest::Approx(0.4));
  CHECK(horizontal_time(0.2, 0.4, 1.0) == doctest::Approx(0.6));
  CHECK(horizontal_time(0.2, 0.4, 0.0) == doctest::Approx(0.4));
  CHECK(vertical_time(15, 15, 60) == 0.0);
  CHECK(vertical_time(15, 2, 60) == doctest::Approx(13.0 / 60.0));
  CHECK(vertical_time(15, 0, 60) == doctest::Approx(0.25));
}

TEST_CASE("travel time on the bundled site") {
  const HookTravel h = travel_time(kSupply2, kDemand1, kCrane8, site_spec(), 1.0);
  CHECK(h.t_radial == doctest::Approx(ref::kRadialTime).epsilon(1e-13));
  CHECK(h.t_slew == doctest::Approx(ref::kSlewTime).epsilon(1e-13));
  CHECK(h.t_horizontal == doctest::Approx(ref::kHorizontalTime).epsilon(1e-13));
  CHECK(h.t_vertical == doctest::Approx(ref::kVerticalTime).epsilon(1e-13));
  CHECK(h.t_total == doctest::Approx(ref::kTotalTime).epsilon(1e-13));

  // The fixture file carries the same crane parameters.
  CHECK(load_instance(ref::kSiteFile).crane == site_spec());
}

TEST_CASE("travel time without motion is zero") {
  const Point3 p{10, 20, 5};
  CHECK(travel_time(p, p, {0, 0, 30}, site_spec(), 1.0).t_total == 0.0);
}

TEST_CASE("gamma scales the total linearly") {
  const double one = travel_time(kSupply2, kDemand1, kCrane8, site_spec(), 1.0).t_total;
  const double two = travel_time(kSupply2, kDemand1, kCrane8, site_spec(), 2.0).t_total;
  CHECK(two == 2.0 * one);
}

TEST_CASE("random triples: symmetry, bounds and no NaN") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < 20000; ++n) {
    const Point3 s{coord(gen), coord(gen), coord(gen)};
    // Every 10th demand sits right on the mast.
    const Point3 c{coord(gen), coord(gen), 30};
    const Point3 d = n % 10 == 0 ? Point3{c.x, c.y, coord(gen)}
                                 : Point3{coord(gen), coord(gen), coord(gen)};
    const CraneSpec spec{1 + 60 * unit(gen), 1 + 60 * unit(gen), 0.1 + 10 * unit(gen),
                         unit(gen), unit(gen), 2.0};
    const double gamma = 0.1 + 3 * unit(gen);

    const HookTravel a = travel_time(s, d, c, spec, gamma);
    const HookTravel b = travel_time(d, s, c, spec, gamma);
    REQUIRE_FALSE(std::isnan(a.t_total));
    CHECK(a.t_total == doctest::Approx(b.t_total).epsilon(1e-12));
    CHECK(a.t_radial >= 0.0);
    CHECK(a.t_slew >= 0.0);
    CHECK(a.t_slew <= std::numbers::pi / spec.v_slew + 1e-12);
    CHECK(a.t_horizontal >= std::max(a.t_radial, a.t_slew));
    CHECK(a.t_total >= gamma * std::max(a.t_horizontal, a.t_vertical) * (1 - 1e-12));
    CHECK(horizontal_time(a.t_radial, a.t_slew, 1.0) ==
          doctest::Approx(a.t_radial + a.t_slew));
  }
}

TEST_CASE("crane spec validation names the field") {
  CraneSpec spec = site_spec();
  spec.v_slew = 0.0;
  CHECK_THROWS_WITH_AS(validate(spec), "v_slew must be positive", std::invalid_argument);
  spec = site_spec();
  spec.beta = 1.5;
  CHECK_THROWS_WITH_AS(validate(spec), "beta must lie in [0, 1]", std::invalid_argument);
  CHECK_NOTHROW(validate(site_spec()));
}
