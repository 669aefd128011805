#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fourkin/calculus.hpp"
#include "fourkin/registry.hpp"
#include "fourkin/scenario.hpp"

using namespace fourkin;

namespace {

const Mat3 kGenericMatrix{0.2, -0.4, 0.1, 0.0, 0.3, -0.2, 0.5, 0.1, -0.3};

VectorField4 generic_linear() {
  return linear_field(kGenericMatrix, {0.4, -0.1, 0.2}, {0.1, 0.0, -0.2});
}

}  // namespace

TEST_CASE("covariant time derivative of a resting four-velocity is the frame acceleration") {
  const Vec3 a{0.0, 0.0, 2.0};
  const Motion m = Motion::uniform_acceleration(a);
  const SpacetimePoint p{0.6, {0.2, 0.4, -0.8}};
  const VelocityField rest = as_velocity(constant_field(Vec3::zero()));

  const MixedTensor4 d = covariant_derivative(four_velocity_field(rest), christoffel(m, p), p);
  for (int alpha = 0; alpha < 3; ++alpha) {
    REQUIRE(d(alpha + 1, 0) == a[alpha]);
  }
  for (int j = 0; j < 4; ++j) REQUIRE(d(0, j) == 0.0);
}

TEST_CASE("material derivative of a constant vector seen from a rotating frame") {
  const Motion m = Motion::rotation({0.0, 0.0, 1.0}, 0.7);
  const SpacetimePoint p{0.9, {0.4, -0.3, 0.9}};
  const VelocityField rest = as_velocity(constant_field(Vec3::zero()));
  const VectorField4 c = constant_field({0.3, -1.1, 0.7});

  const FourVector rate = material_derivative(c, rest, christoffel(m, p), p);
  const Vec3 want = christoffel(m, p).g0b * Vec3{0.3, -1.1, 0.7};
  REQUIRE(rate.c0 == 0.0);
  REQUIRE(max_abs(rate.c - want) == 0.0);
}

TEST_CASE("material and naive rates differ by the connection terms") {
  const Motion m = Motion::rotation({0.0, 0.0, 1.0}, 1.0);
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VectorField4 c = generic_linear();

  for (const auto& p : draw_samples(SamplingSpec{}, 808)) {
    const Christoffel g = christoffel(m, p);
    const FourVector mat = material_derivative(c, vf, g, p);
    const FourVector naive = naive_rate(c, vf, p);
    const Vec3 extra = g.g0b * c.value(p).c;  // spacelike c, so only the spin term
    REQUIRE(mat.c0 == naive.c0);
    REQUIRE(max_abs(mat.c - (naive.c + extra)) < 1e-15);
  }
}

TEST_CASE("nonzero time component brings in the frame acceleration") {
  const Motion m = Motion::uniform_acceleration({0.0, 0.0, 2.0});
  const SpacetimePoint p{0.5, {0.1, 0.2, 0.3}};
  const VelocityField rest = as_velocity(constant_field(Vec3::zero()));
  const VectorField4 timed = constant_field({0.0, 0.0, 0.0}, 3.0);

  const FourVector rate = material_derivative(timed, rest, christoffel(m, p), p);
  REQUIRE(max_abs(rate.c - Vec3{0.0, 0.0, 6.0}) == 0.0);
}

TEST_CASE("upper convected rate of the generating four-velocity vanishes exactly") {
  for (const VelocityField& vf :
       {as_velocity(rigid_rotation_field({0.0, 0.0, 0.5})), as_velocity(shear_field(1.0)),
        as_velocity(radial_field(0.4))}) {
    for (const auto& p : draw_samples(SamplingSpec{}, 1234)) {
      const FourVector rate = upper_convected(four_velocity_field(vf), vf, p);
      REQUIRE(rate.c0 == 0.0);
      REQUIRE(max_abs(rate.c) == 0.0);
    }
  }
}

TEST_CASE("connection terms cancel in the convected bracket") {
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VectorField4 c = generic_linear();
  for (const Motion& m : {Motion::rotation({0.0, 0.0, 1.0}, 0.7),
                          Motion::uniform_acceleration({0.0, 0.0, 2.0})}) {
    for (const auto& p : draw_samples(SamplingSpec{}, 555)) {
      const FourVector plain = upper_convected(c, vf, p);
      const FourVector via = upper_convected_via_christoffel(c, vf, christoffel(m, p), p);
      REQUIRE(max_abs(via - plain) < 1e-12);
    }
  }
}

TEST_CASE("convected and corotational rates of a constant vector under simple shear") {
  // v = (2 x2, 0, 0), C = (3, 5, 7): the advective part vanishes, leaving
  // -L C, +L^T C and -W C.
  const VelocityField vf = as_velocity(shear_field(2.0, 1, 2));
  const VectorField4 c = constant_field({3.0, 5.0, 7.0});
  const SpacetimePoint p{0.4, {0.6, -0.2, 0.9}};

  const FourVector upper = upper_convected(c, vf, p);
  REQUIRE(upper.c0 == 0.0);
  REQUIRE(max_abs(upper.c - Vec3{-10.0, 0.0, 0.0}) == 0.0);

  const FourVector lower = lower_convected(c, vf, p);
  REQUIRE(max_abs(lower.c - Vec3{0.0, 6.0, 0.0}) == 0.0);

  const FourVector corot = jaumann(c, vf, p);
  REQUIRE(max_abs(corot.c - Vec3{-5.0, 3.0, 0.0}) == 0.0);
}

TEST_CASE("corotational rate is the mean of the convected pair") {
  const VelocityField vf = as_velocity(rigid_rotation_field({0.2, -0.1, 0.5}));
  const VectorField4 c = generic_linear();
  for (const auto& p : draw_samples(SamplingSpec{}, 9090)) {
    const FourVector mean = 0.5 * (upper_convected(c, vf, p) + lower_convected(c, vf, p));
    REQUIRE(max_abs(jaumann(c, vf, p) - mean) < 1e-15);
  }
}

TEST_CASE("corotational rate of an irrotational flow has no spin term") {
  const VelocityField vf = as_velocity(radial_field(0.4));
  const VectorField4 c = generic_linear();
  const SpacetimePoint p{0.3, {0.5, -0.5, 0.2}};
  REQUIRE(max_abs(jaumann(c, vf, p) - naive_rate(c, vf, p)) == 0.0);
}

TEST_CASE("convected rates reject fields with a time component") {
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const VectorField4 timed = constant_field({1.0, 0.0, 0.0}, 1.0);
  const SpacetimePoint p{0.0, {0.0, 0.0, 0.0}};
  REQUIRE_THROWS_AS(lower_convected(timed, vf, p), NotSpacelike);
  REQUIRE_THROWS_AS(jaumann(timed, vf, p), NotSpacelike);
}

TEST_CASE("scalar material derivative of a travelling wave") {
  const Vec3 k{1.0, 2.0, -0.5};
  const double freq = 0.8;
  const ScalarField wave = wave_scalar(k, freq, 1.5);
  const VelocityField vf = as_velocity(rigid_rotation_field({0.0, 0.0, 0.5}));
  const SpacetimePoint p{0.7, {0.3, -0.8, 0.5}};

  const double want = 1.5 * std::cos(dot(k, p.x) - freq * p.t) * (dot(k, vf(p)) - freq);
  REQUIRE(material_derivative_scalar(wave, vf, p) == Catch::Approx(want).margin(1e-15));
}
