#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "atompot/constants.hpp"
#include "atompot/core.hpp"

using namespace atompot;

namespace {
// reference rubidium D-line parameters, used across the whole suite
const AtomSpecies rb{2.37e15, 2.53e-29, {}};
} // namespace

TEST_CASE("vacuum constants are consistent") {
    const PhysicalConstants pc;
    CHECK(pc.hbar > 0.0);
    CHECK(pc.eps0 > 0.0);
    CHECK(pc.mu0 > 0.0);
    CHECK(pc.c > 0.0);
    CHECK(std::fabs(pc.mu0 * pc.eps0 * pc.c * pc.c - 1.0) < 1e-12);
}

TEST_CASE("alpha_dc reproduces the static polarizability") {
    // independent arithmetic: 2 d^2 / (3 hbar w10)
    const double oracle =
        2.0 * rb.dipole * rb.dipole / (3.0 * constants::hbar * rb.omega10);
    CHECK(alpha_dc(rb) == oracle);
    CHECK_THAT(alpha_dc(rb), Catch::Matchers::WithinRel(1.707e-39, 5e-4));
}

TEST_CASE("alpha_dc scaling") {
    AtomSpecies zero = rb;
    zero.dipole = 0.0;
    CHECK(alpha_dc(zero) == 0.0);

    AtomSpecies doubled = rb;
    doubled.dipole = 2.0 * rb.dipole;
    CHECK(alpha_dc(doubled) == 4.0 * alpha_dc(rb));

    // homogeneity: degree 2 in dipole, degree -1 in omega10
    for (double s : {0.5, 1.7, 3.0, 11.0}) {
        AtomSpecies a = rb;
        a.dipole = s * rb.dipole;
        CHECK_THAT(alpha_dc(a), Catch::Matchers::WithinRel(s * s * alpha_dc(rb), 1e-14));
        AtomSpecies b = rb;
        b.omega10 = s * rb.omega10;
        CHECK_THAT(alpha_dc(b), Catch::Matchers::WithinRel(alpha_dc(rb) / s, 1e-14));
    }
}

TEST_CASE("AtomSpecies validation") {
    CHECK_NOTHROW(validate(rb));
    CHECK_THROWS_AS(validate(AtomSpecies{-1.0, 1e-29, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AtomSpecies{2.37e15, 0.0, {}}), std::invalid_argument);
}

TEST_CASE("LaserSpec validation") {
    CHECK_NOTHROW(validate(LaserSpec{1e8, UniformField{5e4}, constants::pi / 2}));
    CHECK_THROWS_AS(validate(LaserSpec{1e8, UniformField{-1.0}, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(LaserSpec{1e8, UniformField{1.0}, 4.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(LaserSpec{1e8, EvanescentField{1e-23, 1e-6, 0.0}, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("PotentialCurve invariants") {
    PotentialCurve ok{{1e-9, 2e-9, 3e-9}, {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {12, 15, 18}};
    CHECK_NOTHROW(validate(ok));

    PotentialCurve bad_sum = ok;
    bad_sum.u_tot[1] = 0.0;
    CHECK_THROWS_AS(validate(bad_sum), std::invalid_argument);

    PotentialCurve bad_grid = ok;
    bad_grid.z_grid[2] = bad_grid.z_grid[1];
    CHECK_THROWS_AS(validate(bad_grid), std::invalid_argument);

    PotentialCurve bad_z = ok;
    bad_z.z_grid[0] = -1e-9;
    CHECK_THROWS_AS(validate(bad_z), std::invalid_argument);
}
