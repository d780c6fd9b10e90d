// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>

#include <doctest.h>

#include "lrbound/special.hpp"
#include "oracles.hpp"

using namespace lrb;

TEST_CASE("X_y solves its defining equation and its minimization") {
  for (double y : {-0.5, 0.0, 0.5, 0.75, 1.0, 3.0, 10.0}) {
    const double x = solve_X(y);
    CHECK(std::abs(x * std::asinh(x) - std::sqrt(x * x + 1.0) - y) < 1e-10);
    const double ref = oracle::grid_min([&](double k) { return (std::cosh(k) + y) / k; }, 1e-3, 10.0, 20000);
    CHECK(x == doctest::Approx(ref).epsilon(1e-9));
  }
  CHECK(solve_X(-1.0) == 0.0);
  CHECK_THROWS(solve_X(-1.5));
}

TEST_CASE("Z_y matches a brute-force minimization") {
  for (double y : {0.0, 1.0, 5.0, 20.0}) {
    auto f = [&](double k) {
      const double c = std::cosh(k);
      return (c + std::sqrt(c * c + 4.0 * y * (1.0 + c))) / k;
    };
    CHECK(solve_Z(y) == doctest::Approx(oracle::grid_min(f, 1e-3, 10.0, 20000)).epsilon(1e-9));
  }
  CHECK(solve_Z(0.0) == doctest::Approx(2.0 * solve_X(0.0)).epsilon(1e-12));
}

TEST_CASE("Bessel functions agree with the standard library") {
  for (int n : {0, 1, 2, 5, 12, 30})
    for (double x : {0.0, 0.3, 1.0, 4.0, 10.0, 25.0, 30.0, 60.0}) {
      const double I = std::cyl_bessel_i(static_cast<double>(n), x);
      CHECK(bessel_i(n, x) == doctest::Approx(I).epsilon(1e-12));
      const double J = std::cyl_bessel_j(static_cast<double>(n), x);
      CHECK(std::abs(bessel_j(n, x) - J) <= 1e-13 + 1e-11 * std::abs(J));
    }
  CHECK(bessel_i(-3, 2.0) == doctest::Approx(bessel_i(3, 2.0)));
  CHECK(bessel_j(-3, 2.0) == doctest::Approx(-bessel_j(3, 2.0)));
}

TEST_CASE("Lambert W agrees with bisection") {
  for (double x : {0.0, 1e-8, 0.1, 1.0, std::exp(1.0), 10.0, 1e3, 1e8}) {
    const double w = lambert_w0(x);
    CHECK(w == doctest::Approx(oracle::lambert_w_bisect(x)).epsilon(1e-12));
  }
  CHECK(lambert_w0(-1.0 / std::exp(1.0)) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(lambert_w0(1.0) == doctest::Approx(0.5671432904097838));
}
