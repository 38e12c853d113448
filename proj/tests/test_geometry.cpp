#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "kerrmet/constants.hpp"
#include "kerrmet/geometry.hpp"

using namespace kerrmet;

namespace {

Geometry earth_geometry(double n_prime = 1.0) {
  return Geometry::make(8.87e-3, 6.37e6, 10.0, 0.01, n_prime);
}

}  // namespace

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(Geometry::make(2.0, 1.0, 1.0, 1.0), std::domain_error);  // inside horizon
  CHECK_THROWS_AS(Geometry::make(0.0, 1.0, -0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry::make(0.0, 1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry::make(0.0, 1.0, 1.0, 1.0, 0.5), std::invalid_argument);
  const Geometry g = earth_geometry();
  CHECK(g.r_b == g.r_a + g.h);
}

TEST_CASE("proper time ratio") {
  SUBCASE("flat spacetime gives one in both modes") {
    const Geometry g = Geometry::make(0.0, 1.0, 0.5, 1.0);
    CHECK(proper_time_ratio(g, DilationMode::exact) == 1.0);
    CHECK(proper_time_ratio(g, DilationMode::first_order) == 1.0);
  }
  SUBCASE("coincident arms give one") {
    const Geometry g = Geometry::make(0.1, 1.0, 0.0, 1.0);
    CHECK(proper_time_ratio(g, DilationMode::exact) == 1.0);
    CHECK(proper_time_ratio(g, DilationMode::first_order) == 1.0);
  }
  SUBCASE("Earth-surface values") {
    const Geometry g = earth_geometry();
    const double delta = g.r_s * g.h / (2.0 * g.r_a * g.r_b);
    CHECK(delta == doctest::Approx(1.093e-15).epsilon(1e-3));
    CHECK(dilation_delta(g) == delta);
    // Exact deviation from 1 agrees with -delta far beyond the headline
    // 1e-12 requirement.
    CHECK(proper_time_ratio_m1(g) == doctest::Approx(-delta).epsilon(1e-8));
    const double exact = proper_time_ratio(g, DilationMode::exact);
    const double first = proper_time_ratio(g, DilationMode::first_order);
    CHECK(std::abs(exact - first) / exact <= 1e-12);
  }
  SUBCASE("ratio lies in (0, 1] and first order trails by O(delta^2)") {
    // Family with r_a = 1, h = 0.1: the Taylor remainder constant is
    // (r_a + r_b)/h + 1/2 = 21.5.
    for (double r_s : {1e-8, 1e-6, 1e-5, 1e-4, 1e-3}) {
      const Geometry g = Geometry::make(r_s, 1.0, 0.1, 1.0);
      const double exact = proper_time_ratio(g, DilationMode::exact);
      const double delta = dilation_delta(g);
      CHECK(exact > 0.0);
      CHECK(exact <= 1.0);
      CHECK(std::abs(exact - (1.0 - delta)) <= 25.0 * delta * delta + 1e-15);
    }
  }
  SUBCASE("horizon rejected") {
    Geometry g = earth_geometry();
    g.r_s = g.r_a;
    CHECK_THROWS_AS(proper_time_ratio(g, DilationMode::exact), std::domain_error);
  }
}

TEST_CASE("arm proper times") {
  const Geometry g = earth_geometry();
  const ArmTimes t = arm_proper_times(g);
  CHECK(t.tau1 == 0.01 / speed_of_light);
  CHECK(t.tau1 == doctest::Approx(3.3356409519815204e-11).epsilon(1e-14));
  CHECK(t.tau2 <= t.tau1);
  CHECK(t.delta == dilation_delta(g));

  SUBCASE("flat spacetime equalizes the arms") {
    const Geometry flat = Geometry::make(0.0, 6.37e6, 10.0, 0.01);
    const ArmTimes ft = arm_proper_times(flat);
    CHECK(ft.tau1 == ft.tau2);
  }
  SUBCASE("first-order tau2 is within the Taylor remainder of exact") {
    for (double r_s : {1e-6, 1e-4, 1e-3}) {
      const Geometry fam = Geometry::make(r_s, 1.0, 0.1, 1.0);
      const ArmTimes ft = arm_proper_times(fam);
      const double first = (1.0 - ft.delta) * ft.tau1;
      CHECK(std::abs(ft.tau2 - first) <= 25.0 * ft.delta * ft.delta * ft.tau1 + 1e-26);
    }
  }
}

TEST_CASE("upper-arm linear phase") {
  SUBCASE("flat spacetime: (1 - 1/n') L") {
    const Geometry g = Geometry::make(0.0, 6.37e6, 10.0, 0.01, 1.5);
    const LinearPhase phase = linear_phase_phi24(g);
    CHECK(phase.exact == doctest::Approx((1.0 - 1.0 / 1.5) * 0.01).epsilon(1e-15));
    CHECK(phase.first_order == doctest::Approx(phase.exact).epsilon(1e-15));
  }
  SUBCASE("flat spacetime with n' = 1 vanishes") {
    const Geometry g = Geometry::make(0.0, 6.37e6, 10.0, 0.01, 1.0);
    const LinearPhase phase = linear_phase_phi24(g);
    CHECK(phase.exact == 0.0);
    CHECK(phase.first_order == 0.0);
  }
  SUBCASE("Earth with n' = 1.5: exact and first order agree to 1e-12") {
    const LinearPhase phase = linear_phase_phi24(earth_geometry(1.5));
    CHECK(std::abs(phase.exact - phase.first_order) / std::abs(phase.exact) <= 1e-12);
  }
  SUBCASE("n' = 1 keeps only the dilation term") {
    const LinearPhase phase = linear_phase_phi24(earth_geometry(1.0));
    const double delta = dilation_delta(earth_geometry(1.0));
    CHECK(phase.exact == doctest::Approx(delta * 0.01).epsilon(1e-6));
  }
}

TEST_CASE("dtau2/drs") {
  SUBCASE("no separation, no signal") {
    const Geometry g = Geometry::make(0.1, 1.0, 0.0, 1.0);
    CHECK(dtau2_drs(g) == 0.0);
  }
  SUBCASE("linear in the separation") {
    const Geometry g1 = Geometry::make(1e-3, 1.0, 0.05, 1.0);
    const Geometry g2 = Geometry::make(1e-3, 1.0, 0.10, 1.0);
    // r_b differs slightly between the two, so compare through the formula.
    CHECK(dtau2_drs(g2) / dtau2_drs(g1) ==
          doctest::Approx((0.10 / g2.r_b) / (0.05 / g1.r_b)).epsilon(1e-14));
  }
  SUBCASE("Earth value by direct arithmetic") {
    const Geometry g = earth_geometry();
    const double expected = -(10.0 / (2.0 * 6.37e6 * 6.37e6)) * (0.01 / speed_of_light);
    // The hand formula above drops the +h in r_b; agreement to 1e-5 relative.
    CHECK(dtau2_drs(g) == doctest::Approx(expected).epsilon(1e-5));
    CHECK(dtau2_drs(g) ==
          -(g.h / (2.0 * g.r_a * g.r_b)) * (g.arm_length / speed_of_light));
    CHECK(dtau2_drs(g) < 0.0);
  }
  SUBCASE("matches a central finite difference of tau2") {
    // Small-r_s family so the first-order coupling and the exact derivative
    // agree well below the 1e-8 gate; the difference is formed from the
    // full-precision ratio - 1.
    const double r_s = 1e-9, step = 0.5e-9;
    const Geometry lo = Geometry::make(r_s - step, 1.0, 0.1, 1.0);
    const Geometry hi = Geometry::make(r_s + step, 1.0, 0.1, 1.0);
    const double tau1 = 1.0 / speed_of_light;
    const double fd =
        (proper_time_ratio_m1(hi) - proper_time_ratio_m1(lo)) * tau1 / (2.0 * step);
    const Geometry mid = Geometry::make(r_s, 1.0, 0.1, 1.0);
    CHECK(fd == doctest::Approx(dtau2_drs(mid)).epsilon(1e-8));
  }
}

TEST_CASE("curvature coupling is the only reference-frame combination used") {
  const Geometry g = earth_geometry();
  CHECK(curvature_coupling(g) == g.h / (2.0 * g.r_a * g.r_b));
  CHECK(curvature_coupling(g) * g.r_s == dilation_delta(g));
}
