#include <cmath>

#include "doctest.h"
#include "padplace/energy.hpp"
#include "padplace/errors.hpp"
#include "support.hpp"

using namespace padplace;

namespace {

// Draws parameters that leave a positive charging budget.
UavParams random_valid(testsupport::Gen& g) {
  UavParams p;
  p.v_u = g.real(1, 30);
  p.p_mov = g.real(20, 500);
  p.p_blade = g.real(0.1, 200);
  p.p_induced = g.real(0.1, 200);
  p.delta = g.real(1, 600);
  p.e_node = g.real(1, 2000);
  p.eta = g.real(0.05, 1.0);
  const double fixed = (p.p_blade + p.p_induced) * p.delta + p.e_node / p.eta;
  p.e_max = fixed * g.real(1.0001, 50.0);
  return p;
}

}  // namespace

TEST_CASE("hover_power") {
  UavParams p;
  CHECK(hover_power(p) == 150.0);
  p.p_blade = 0;
  p.p_induced = 0;
  CHECK(hover_power(p) == 0.0);
}

TEST_CASE("flight_energy examples") {
  UavParams p;
  const FlightEnergy zero = flight_energy(p, 0, 0, 0);
  CHECK(zero.e_mov == 0.0);
  CHECK(zero.e_hov == 0.0);
  CHECK(zero.e_charge == 0.0);
  CHECK(zero.e_consume == 0.0);

  // 120 W * 100 s, 150 W * 60 s, 300 J / 0.3
  const FlightEnergy f = flight_energy(p, 100, 1, 300);
  CHECK(f.e_mov == doctest::Approx(12000));
  CHECK(f.e_hov == doctest::Approx(9000));
  CHECK(f.e_charge == doctest::Approx(1000));
  CHECK(f.e_consume == doctest::Approx(22000));

  p.eta = 1.0;
  CHECK(flight_energy(p, 0, 1, 500).e_charge == 500.0);
}

TEST_CASE("flight_energy parts sum to the total") {
  testsupport::Gen g(8);
  for (int i = 0; i < 1000; ++i) {
    const UavParams p = random_valid(g);
    const auto f = flight_energy(p, g.real(0, 1000), g.index(0, 20), g.real(0, 5000));
    CHECK(f.e_consume == (f.e_mov + f.e_hov) + f.e_charge);
  }
}

TEST_CASE("d_max examples") {
  UavParams p;
  CHECK(d_max(p) == doctest::Approx(6500.0).epsilon(1e-12));
  const double base = d_max(p);
  p.e_max *= 2;
  CHECK(d_max(p) == doctest::Approx(2 * base).epsilon(1e-12));
  p.e_max = 1e-9;
  CHECK(d_max(p) < 1e-9);
}

TEST_CASE("d_cover examples") {
  UavParams p;
  CHECK(d_cover(p) == doctest::Approx(2828.0).epsilon(1e-12));
  p.e_max = 150.0 * 60.0 + 338.4 / 0.3;
  CHECK_THROWS_AS(d_cover(p), InfeasibleParams);
  p.e_max -= 1.0;
  CHECK_THROWS_AS(d_cover(p), InfeasibleParams);
}

TEST_CASE("validate rejects bad fields") {
  UavParams p;
  CHECK_NOTHROW(p.validate());
  p.eta = 1.5;
  CHECK_THROWS_AS(p.validate(), InfeasibleParams);
  p = UavParams{};
  p.v_u = 0;
  CHECK_THROWS_AS(p.validate(), InfeasibleParams);
  p = UavParams{};
  p.e_max = 1000;
  CHECK_THROWS_AS(p.validate(), InfeasibleParams);
}

TEST_CASE("d_cover stays below half of d_max") {
  testsupport::Gen g(42);
  for (int i = 0; i < 10000; ++i) {
    const UavParams p = random_valid(g);
    REQUIRE(d_cover(p) > 0);
    CHECK(d_cover(p) < d_max(p) / 2);
  }
}

TEST_CASE("radii grow with e_max and shrink with p_mov") {
  testsupport::Gen g(43);
  for (int i = 0; i < 2000; ++i) {
    UavParams lo = random_valid(g);
    UavParams hi = lo;
    hi.e_max *= g.real(1.001, 3);
    CHECK(d_max(hi) > d_max(lo));
    CHECK(d_cover(hi) > d_cover(lo));
    UavParams slow = lo;
    slow.p_mov *= g.real(1.001, 3);
    CHECK(d_max(slow) < d_max(lo));
    CHECK(d_cover(slow) < d_cover(lo));
  }
}
