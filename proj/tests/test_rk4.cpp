#include <array>
#include <cmath>

#include "bgkstab/rk4.hpp"
#include "doctest.h"

using namespace bgk;

namespace {
using S2 = std::array<double, 2>;
const auto harmonic = [](const S2& y, S2& dy) {
  dy[0] = y[1];
  dy[1] = -y[0];
};
}  // namespace

TEST_SUITE("rk4") {

TEST_CASE("harmonic oscillator over one period") {
  S2 y{1.0, 0.0};
  const int n = 2000;
  const double h = 2.0 * M_PI / n;
  for (int i = 0; i < n; ++i) rk4_step<2>(harmonic, y, h);
  CHECK(std::abs(y[0] - 1.0) <= 1e-9);
  CHECK(std::abs(y[1]) <= 1e-9);
}

TEST_CASE("event starting on the event surface") {
  // velocity starts at zero, crosses zero again (rising) at t = pi
  S2 y0{1.0, 0.0};
  auto ev = [](const S2& y) { return y[1]; };
  auto res = integrate_to_event<2>(harmonic, y0, 2.0 * M_PI / 2000, 10.0, ev, +1, 1e-12, 1e-9);
  REQUIRE(res.found);
  CHECK(std::abs(res.t - M_PI) <= 1e-9);
  CHECK(res.y[0] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("event at exact linear crossing") {
  auto rhs = [](const S2& y, S2& dy) {
    dy[0] = y[1];
    dy[1] = 0.0;
  };
  S2 y0{0.0, 2.0};
  auto ev = [](const S2& y) { return y[0] - 3.0; };
  auto res = integrate_to_event<2>(rhs, y0, 0.013, 10.0, ev, +1, 1e-13, 1e-12);
  REQUIRE(res.found);
  CHECK(std::abs(res.t - 1.5) <= 1e-12);
}

TEST_CASE("direction filter skips opposite crossings") {
  // y0 = cos t falls through zero at pi/2; first rising crossing is 3*pi/2
  S2 y0{1.0, 0.0};
  auto ev = [](const S2& y) { return y[0]; };
  auto res = integrate_to_event<2>(harmonic, y0, 2.0 * M_PI / 4000, 10.0, ev, +1, 1e-12, 1e-9);
  REQUIRE(res.found);
  CHECK(std::abs(res.t - 3.0 * M_PI / 2.0) <= 1e-8);
}

TEST_CASE("missing event reported") {
  S2 y0{1.0, 0.0};
  auto ev = [](const S2& y) { return y[0] - 5.0; };  // never reached
  auto res = integrate_to_event<2>(harmonic, y0, 0.01, 20.0, ev, +1, 1e-12, 1e-9);
  CHECK(!res.found);
}

}  // TEST_SUITE
