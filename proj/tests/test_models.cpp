// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include <cmath>

#include <doctest.h>
#include <Eigen/Dense>

#include "lrbound/builtins.hpp"
#include "lrbound/models.hpp"
#include "lrbound/special.hpp"
#include "lrbound/ti.hpp"

using namespace lrb;

namespace {

double velocity(const char* model, const char* params) { return model_velocity(parse_model_params(model, params)).value; }

const VelocityBranch& branch(const VelocityResult& v, const std::string& label) {
  for (const auto& b : v.branches)
    if (b.label == label) return b;
  FAIL("missing branch " << label);
  return v.branches.front();
}

}  // namespace

TEST_CASE("parameter parsing accepts fractions and infinity") {
  CHECK(parse_param_value("3/2") == 1.5);
  CHECK(std::isinf(parse_param_value("inf")));
  CHECK_THROWS(parse_param_value("abc"));
  CHECK_THROWS(parse_param_value("1/0"));
  const auto p = parse_model_params("tfim", "J=1, h=2, d=3");
  CHECK(p.get("h") == 2.0);
  CHECK_THROWS_AS(parse_model_params("tfim", "J=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_model_params("tfim", "J=1,h=1,q=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_model_params("tfim", "J=-1,h=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_model_params("nope", ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_model_params("wen-rotor", "J=1,g=1,d=1"), std::invalid_argument);
  CHECK_THROWS_AS(model_velocity(parse_model_params("tfim-spin-s", "J=1,h=1,S=inf")), std::invalid_argument);
}

TEST_CASE("TFIM closed form takes the minimum branch") {
  const auto v = model_velocity(parse_model_params("tfim", "d=2,J=1,h=1"));
  CHECK(v.branch == "2X0*sqrt(2Jh)");
  CHECK(v.value == doctest::Approx(2.0 * solve_X(0.0) * std::sqrt(2.0)));
  CHECK(branch(v, "8X_{1/2}J").value == doctest::Approx(8.0 * solve_X(0.5)));
  CHECK(branch(v, "8X0h").value == doctest::Approx(8.0 * solve_X(0.0)));
  CHECK(velocity("tfim", "d=2,J=1,h=100") == doctest::Approx(8.0 * solve_X(0.5)));
  CHECK(baseline_velocity(parse_model_params("tfim", "d=2,J=1,h=1")) == doctest::Approx(16.0 * std::exp(1.0)));
}

TEST_CASE("Heisenberg J_m is the largest singular value") {
  const double Jx = 0.3, Jy = -1.2, Jz = 0.7;
  Eigen::Matrix3d M;
  M << 0, Jy, Jz, Jx, 0, Jz, Jx, Jy, 0;
  const double ref = Eigen::JacobiSVD<Eigen::Matrix3d>(M).singularValues()(0);
  CHECK(heisenberg_jm(Jx, Jy, Jz) == doctest::Approx(ref).epsilon(1e-12));
  CHECK(velocity("heisenberg-xyz", "J=1,S=inf,d=1") == doctest::Approx(4.0 * 2.0 * solve_X(1.0)));
  CHECK_FALSE(has_baseline(parse_model_params("heisenberg-xyz", "J=1,S=inf")));
}

TEST_CASE("truncated BH dispersion is the top eigenvalue of its 2x2 system") {
  const double S = 2.0, U = 3.0, J = 0.5, k = 0.9;
  const int d = 2;
  const double a = 2.0 * J * (d + d * std::cosh(k) - 1.0 / (2.0 * S));
  const double bc = 2.0 * S * U * 8.0 * J * (1.0 - 1.0 / (2.0 * S)) * d * (1.0 + std::cosh(k));
  Eigen::Matrix2d M;
  M << a, 1.0, bc, 0.0;
  const double ref = Eigen::EigenSolver<Eigen::Matrix2d>(M).eigenvalues().real().maxCoeff();
  CHECK(truncated_bh_omega(S, U, J, d, k) == doctest::Approx(ref).epsilon(1e-12));
  const auto v = model_velocity(parse_model_params("truncated-bh", "J=0.5,U=3,S=2,d=2"));
  for (const auto& b : v.branches)
    if (!b.is_bound) CHECK(b.label != v.branch);
}

TEST_CASE("FH branches") {
  const auto v = model_velocity(parse_model_params("fh-sun", "J=1,U=5"));
  CHECK(v.branch == "Z_{U/J}J");
  CHECK(branch(v, "2X_{3U/4J}J").value == doctest::Approx(2.0 * solve_X(3.75)));
  CHECK(branch(v, "Z_{U/J}J").value == doctest::Approx(solve_Z(5.0)));
  CHECK(branch(v, "8X0J").value == doctest::Approx(8.0 * solve_X(0.0)));
}

TEST_CASE("FH anticommutator bound reduces to modified Bessel functions at U = 0") {
  for (int x : {0, 1, 4, 9})
    for (double t : {0.0, 0.5, 2.0, 7.0}) {
      const double ref = 2.0 * std::cyl_bessel_i(static_cast<double>(x), 2.0 * t);
      CHECK(fh_anticommutator_bound(Coord{x}, t, 1.0, 0.0, 2) == doctest::Approx(ref).epsilon(1e-12));
      CHECK(free_fermion_exact(Coord{x}, t, 1.0) ==
            doctest::Approx(2.0 * std::abs(std::cyl_bessel_j(static_cast<double>(x), 2.0 * t))).epsilon(1e-10).scale(1e-14));
    }
  CHECK(fh_anticommutator_bound(Coord{1}, 1.0, 1.0, 2.0, 2) ==
        doctest::Approx(2.0 * std::exp(3.0) * std::cyl_bessel_i(1.0, 2.0)).epsilon(1e-12));
}

TEST_CASE("FH coefficient cells reproduce the closed-form branches") {
  CHECK(lr_velocity(fh_fermion_cell(2, 1, 1.0, 1.0)).value == doctest::Approx(2.0 * solve_X(0.75)).epsilon(1e-8));
  CHECK(lr_velocity(fh_modified_cell(2, 1, 1.0, 5.0)).value == doctest::Approx(solve_Z(5.0)).epsilon(1e-8));
}

TEST_CASE("PTC velocity vanishes with the perturbation") {
  CHECK(velocity("ptc", "h=0.01") == doctest::Approx(8.0 * solve_X(0.5) * 0.01));
  const auto spec = builtin_spec(parse_model_params("ptc", "h=0.1"));
  const auto cell = unit_cell_from_spec(spec);
  CHECK(cell.size() == 4);
  const auto red = reduce_unit_cell(cell, {*cell.find("plaquette"), *cell.find("star")});
  CHECK(lr_velocity(red).value == doctest::Approx(8.0 * solve_X(0.5) * 0.1).epsilon(1e-8));
}

TEST_CASE("wen rotor branches") {
  const auto v = model_velocity(parse_model_params("wen-rotor", "J=1,g=1,S=inf,d=2"));
  CHECK(v.value == doctest::Approx(2.0 * solve_X(0.0)));
  for (const auto& b : v.branches) CHECK(b.label.find("S^2") == std::string::npos);
}

TEST_CASE("builtin finite lattices translate home-cell terms") {
  const auto p = parse_model_params("tfim", "J=1,h=1,d=1");
  const auto open = builtin_spec(p, LatticeChoice{{5}, Boundary::open});
  CHECK(open.terms.size() == 9);
  const auto ring = builtin_spec(p, LatticeChoice{{5}, Boundary::periodic});
  CHECK(ring.terms.size() == 10);
  CHECK_FALSE(has_builtin_spec("wen-rotor"));
}
