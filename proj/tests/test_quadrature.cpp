#include <cmath>

#include "bgkstab/error.hpp"
#include "bgkstab/quadrature.hpp"
#include "doctest.h"

using namespace bgk;

TEST_SUITE("quadrature") {

TEST_CASE("single panel is exact through degree 22") {
  // Kronrod-15 integrates polynomials up to degree 22 exactly.
  auto f = [](double x) { return std::pow(x, 22); };
  QuadResult r = gk15_panel(f, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0 / 23.0).epsilon(1e-14));

  auto g = [](double x) { return 5.0 * x * x * x - 2.0 * x + 1.0; };
  r = gk15_panel(g, -1.0, 2.0);
  // antiderivative: 1.25 x^4 - x^2 + x evaluated on [-1,2]
  const double exact = (1.25 * 16 - 4 + 2) - (1.25 - 1 - 1);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-14));
  CHECK(r.error <= 1e-12 * std::abs(exact));
}

TEST_CASE("adaptive smooth integrand") {
  auto f = [](double x) { return std::sin(x); };
  QuadResult r = integrate_adaptive(f, 0.0, M_PI, 1e-13, 0.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) <= 1e-12);
  CHECK(std::abs(r.value - 2.0) <= r.error + 1e-14);
}

TEST_CASE("adaptive handles integrable endpoint singularity") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  QuadResult r = integrate_adaptive(f, 0.0, 1.0, 1e-9, 0.0, 500);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) <= 1e-8);
}

TEST_CASE("gaussian tail") {
  auto f = [](double x) { return std::exp(-0.5 * x * x); };
  QuadResult r = integrate_adaptive(f, 0.0, 12.0, 1e-13, 1e-13);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("fixed panel list matches adaptive") {
  auto f = [](double x) { return std::exp(x); };
  const double edges[3] = {0.0, 0.5, 1.0};
  QuadResult r = integrate_panels(f, edges, 3);
  CHECK(r.panels == 2);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("non-convergence reports achieved estimate") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  QuadResult r = integrate_adaptive(f, 0.0, 1.0, 1e-14, 0.0, 6);
  CHECK(!r.converged);
  CHECK(r.error > 1e-14);
  CHECK_THROWS_AS(integrate_or_throw(f, 0.0, 1.0, 1e-14, 0.0, 6), Error);
  try {
    integrate_or_throw(f, 0.0, 1.0, 1e-14, 0.0, 6);
  } catch (const Error& e) {
    CHECK(e.code() == Status::Quadrature);
  }
}

TEST_CASE("empty interval") {
  auto f = [](double) { return 1.0; };
  QuadResult r = integrate_adaptive(f, 2.0, 2.0, 1e-12, 0.0);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
}

}  // TEST_SUITE
