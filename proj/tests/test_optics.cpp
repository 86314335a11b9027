#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "atompot/constants.hpp"
#include "atompot/optics.hpp"

using namespace atompot;

namespace {
const AtomSpecies rb{2.37e15, 2.53e-29, {}};
const double delta = 2.0 * constants::pi * 1e8;
const LaserSpec uniform{delta, UniformField{5e4}, constants::pi / 2.0};
const LaserSpec evan{delta, EvanescentField{4.51e-23, 39e-6, 430e-9}, constants::pi / 2.0};
} // namespace

TEST_CASE("uniform intensity is height independent") {
    for (double z : {0.0, 50e-9, 1e-6})
        CHECK(intensity_at(uniform, rb, z) == 5e4); // 5 W/cm^2
}

TEST_CASE("evanescent intensity") {
    SECTION("decay-length value") {
        // oracle chain: U_L(z0) = C0 P e^{-2}; I = -2 eps0 c U_L / alpha
        const double u_l = 4.51e-23 * 39e-6 * std::exp(-2.0);
        const double alpha = polarizability_two_level(rb, delta);
        const double oracle = -2.0 * constants::eps0 * constants::c * u_l / alpha;
        const double got = intensity_at(evan, rb, 430e-9);
        CHECK_THAT(got, Catch::Matchers::WithinRel(oracle, 1e-12));
        CHECK_THAT(got, Catch::Matchers::WithinRel(392.6, 1e-3));
    }
    SECTION("exponential profile") {
        const double i0 = intensity_at(evan, rb, 100e-9);
        const double i1 = intensity_at(evan, rb, 100e-9 + 430e-9);
        CHECK_THAT(i1 / i0, Catch::Matchers::WithinRel(std::exp(-2.0), 1e-12));
    }
    SECTION("linear in power") {
        LaserSpec quad = evan;
        std::get<EvanescentField>(quad.field).power = 4.0 * 39e-6;
        CHECK(intensity_at(quad, rb, 200e-9) == 4.0 * intensity_at(evan, rb, 200e-9));
    }
    SECTION("zero power means dark, regardless of detuning sign") {
        LaserSpec dark = evan;
        std::get<EvanescentField>(dark.field).power = 0.0;
        CHECK(intensity_at(dark, rb, 100e-9) == 0.0);
        dark.detuning = -delta;
        CHECK(intensity_at(dark, rb, 100e-9) == 0.0);
    }
    SECTION("red detuning with power is inconsistent with a barrier") {
        LaserSpec red = evan;
        red.detuning = -delta;
        CHECK_THROWS_AS(intensity_at(red, rb, 100e-9), std::invalid_argument);
    }
    SECTION("negative z rejected") {
        CHECK_THROWS_AS(intensity_at(evan, rb, -1e-9), std::invalid_argument);
    }
}

TEST_CASE("field squared") {
    // oracle: E^2 = 2 I / (eps0 c)
    const double e2 = field_squared(uniform, rb, 0.0);
    CHECK_THAT(e2, Catch::Matchers::WithinRel(
                       2.0 * 5e4 / (constants::eps0 * constants::c), 1e-12));
    CHECK_THAT(e2, Catch::Matchers::WithinRel(3.767e7, 5e-4));

    LaserSpec dark = uniform;
    std::get<UniformField>(dark.field).intensity = 0.0;
    CHECK(field_squared(dark, rb, 0.0) == 0.0);
}

TEST_CASE("intensity definition closes onto the optical potential") {
    // -1/4 alpha E^2 reproduces C0 P e^{-2 z / z0} by construction
    const double alpha = polarizability_two_level(rb, delta);
    for (double z : {0.0, 100e-9, 430e-9, 1.5e-6}) {
        const double via_field = -0.25 * alpha * field_squared(evan, rb, z);
        const double closed = 4.51e-23 * 39e-6 * std::exp(-2.0 * z / 430e-9);
        CHECK_THAT(via_field, Catch::Matchers::WithinRel(closed, 1e-12));
    }
}
