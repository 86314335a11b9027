#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "atompot/constants.hpp"
#include "atompot/material.hpp"

using namespace atompot;

TEST_CASE("surface model validation") {
    CHECK_NOTHROW(validate(SurfaceModel{PerfectMirror{}}));
    CHECK_NOTHROW(validate(SurfaceModel{ConstantEps{2.286144}}));
    CHECK_NOTHROW(validate(SurfaceModel{DrudeLorentz{0.0, 1.2e16, 1e14}}));
    CHECK_NOTHROW(validate(SurfaceModel{PlasmonDirect{60.0, 1}}));
    CHECK_THROWS_AS(validate(SurfaceModel{ConstantEps{0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SurfaceModel{DrudeLorentz{0.0, 1.2e16, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SurfaceModel{PlasmonDirect{-1.0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SurfaceModel{PlasmonDirect{60.0, 2}}), std::invalid_argument);
}

TEST_CASE("permittivity") {
    const SurfaceModel ce = ConstantEps{2.286144};
    CHECK(permittivity(ce, {2.37e15, 0.0}) == complexd{2.286144, 0.0});
    CHECK(permittivity(ce, {0.0, 1e15}) == complexd{2.286144, 0.0});

    const SurfaceModel dl = DrudeLorentz{0.0, 1.2e16, 1e14};
    SECTION("imaginary axis is real and >= 1") {
        for (double xi : {1e12, 1e14, 1e15, 1e16, 1e17}) {
            const complexd eps = permittivity(dl, {0.0, xi});
            // oracle: 1 + wP^2 / (xi^2 + gamma xi) for omega0 = 0
            const double oracle = 1.0 + 1.2e16 * 1.2e16 / (xi * xi + 1e14 * xi);
            CHECK_THAT(eps.real(), Catch::Matchers::WithinRel(oracle, 1e-12));
            CHECK(std::fabs(eps.imag()) < 1e-10 * eps.real());
            CHECK(eps.real() >= 1.0);
        }
    }
    SECTION("imaginary axis response decreases with xi") {
        double prev = permittivity(dl, {0.0, 1e12}).real();
        for (double xi = 1e13; xi < 1e18; xi *= 10.0) {
            const double cur = permittivity(dl, {0.0, xi}).real();
            CHECK(cur < prev);
            prev = cur;
        }
    }
    SECTION("transparent at high frequency") {
        CHECK_THAT(permittivity(dl, {1e22, 0.0}).real(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    }
    SECTION("lossy at real frequency") {
        CHECK(permittivity(dl, {1e15, 0.0}).imag() > 0.0);
    }

    CHECK_THROWS_AS(permittivity(SurfaceModel{PerfectMirror{}}, {1e15, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(permittivity(SurfaceModel{PlasmonDirect{60.0, 1}}, {1e15, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("nonretarded reflection coefficient") {
    const complexd w{2.37e15, 0.0};
    CHECK(rp_nonretarded(SurfaceModel{PerfectMirror{}}, w) == complexd{1.0, 0.0});
    CHECK(rp_nonretarded(SurfaceModel{PlasmonDirect{60.0, 1}}, w) == complexd{60.0, 0.0});
    CHECK(rp_nonretarded(SurfaceModel{PlasmonDirect{60.0, -1}}, w) == complexd{-60.0, 0.0});
    CHECK(rp_nonretarded(SurfaceModel{ConstantEps{1.0}}, w) == complexd{0.0, 0.0});
    // glass, n = 1.512: (eps - 1)/(eps + 1)
    CHECK_THAT(rp_nonretarded(SurfaceModel{ConstantEps{2.286144}}, w).real(),
               Catch::Matchers::WithinRel(0.3914, 5e-4));
}

TEST_CASE("fresnel coefficients") {
    const complexd w{2.37e15, 0.0};
    const double k1 = 2.37e15 / constants::c;

    SECTION("mirror limit") {
        const auto [rs, rp] = fresnel(SurfaceModel{PerfectMirror{}}, w, 0.5 * k1);
        CHECK(rs == complexd{-1.0, 0.0});
        CHECK(rp == complexd{1.0, 0.0});
    }
    SECTION("normal incidence") {
        const double eps = 2.286144;
        const auto [rs, rp] = fresnel(SurfaceModel{ConstantEps{eps}}, w, 0.0);
        const double n = std::sqrt(eps);
        CHECK_THAT(rs.real(), Catch::Matchers::WithinRel((1.0 - n) / (1.0 + n), 1e-12));
        CHECK_THAT(rp.real(), Catch::Matchers::WithinRel((n - 1.0) / (n + 1.0), 1e-12));
        CHECK(std::fabs(rs.imag()) < 1e-15);
        CHECK(std::fabs(rp.imag()) < 1e-15);
    }
    SECTION("electrostatic limit at large k_parallel") {
        const SurfaceModel ce = ConstantEps{2.286144};
        const auto [rs, rp] = fresnel(ce, {0.0, 2.37e15}, 1e12);
        const complexd target = rp_nonretarded(ce, {0.0, 2.37e15});
        CHECK_THAT(rp.real(), Catch::Matchers::WithinRel(target.real(), 1e-5));
        CHECK(std::abs(rs) < 1e-4);
    }
    SECTION("passivity for a lossy medium") {
        const SurfaceModel dl = DrudeLorentz{0.0, 1.2e16, 1e14};
        for (double frac : {0.0, 0.3, 0.6, 0.9, 0.999}) {
            const auto [rs, rp] = fresnel(dl, w, frac * k1);
            CHECK(std::abs(rs) <= 1.0 + 1e-12);
            CHECK(std::abs(rp) <= 1.0 + 1e-12);
        }
    }
    SECTION("rejects PlasmonDirect and negative k_parallel") {
        CHECK_THROWS_AS(fresnel(SurfaceModel{PlasmonDirect{60.0, 1}}, w, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(fresnel(SurfaceModel{PerfectMirror{}}, w, -1.0), std::invalid_argument);
    }
}

TEST_CASE("quality factor") {
    // omega_S = omegaP / sqrt(2) when omega0 = 0
    const SurfaceModel dl = DrudeLorentz{0.0, 1.2e16, 1e14};
    const double omega_s = 1.2e16 / std::sqrt(2.0);
    CHECK_THAT(quality_factor(dl), Catch::Matchers::WithinRel(omega_s / 2e14, 1e-12));
    CHECK_THAT(quality_factor(dl), Catch::Matchers::WithinRel(42.43, 5e-4));

    // tuning gamma to omega_S / 120 gives Q = 60
    const SurfaceModel dl60 = DrudeLorentz{0.0, 1.2e16, omega_s / 120.0};
    CHECK_THAT(quality_factor(dl60), Catch::Matchers::WithinRel(60.0, 1e-12));

    CHECK_THROWS_AS(quality_factor(SurfaceModel{PerfectMirror{}}), std::invalid_argument);
    CHECK_THROWS_AS(quality_factor(SurfaceModel{ConstantEps{2.0}}), std::invalid_argument);
}
