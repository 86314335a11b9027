#ifndef ATOMPOT_POTENTIALS_HPP
#define ATOMPOT_POTENTIALS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

#include "atompot/constants.hpp"
#include "atompot/core.hpp"
#include "atompot/greens.hpp"
#include "atompot/material.hpp"
#include "atompot/optics.hpp"
#include "atompot/polarizability.hpp"
#include "atompot/quadrature.hpp"

namespace atompot {

/// Closed-form nonretarded limits vs full (quadrature) evaluation. The
/// choice is always explicit; nothing falls back silently.
enum class EvalMode { nonretarded, full };

/// Which polarizability enters the laser-induced potential.
enum class PolarizabilityModel { two_level, full_sum };

struct PotentialComponents {
    double u_cp;  // J
    double u_l;   // J
    double u_lcp; // J
    double u_tot; // J
};

/// Perfect-conductor nonretarded coefficient C3 = alpha_DC hbar w10 / (32 pi eps0).
inline double c3_perfect_conductor(const AtomSpecies& atom) {
    validate(atom);
    return alpha_dc(atom) * constants::hbar * atom.omega10 / (32.0 * constants::pi * constants::eps0);
}

/// Nonretarded ground-state CP potential -C3 / z^3.
inline double u_cp_nonretarded(double c3, double z) {
    if (!(z > 0.0))
        throw std::invalid_argument("u_cp_nonretarded: z must be positive");
    return -c3 / (z * z * z);
}

/// Undriven CP potential: off-resonant imaginary-frequency integral plus the
/// resonant sum over downward transitions (empty for the ground state).
inline double u_cp(const AtomSpecies& atom, const SurfaceModel& surface, double z,
                   const QuadratureConfig& quad) {
    validate(atom);
    validate(surface);
    if (!(z > 0.0))
        throw std::invalid_argument("u_cp: z must be positive");
    if (std::holds_alternative<PlasmonDirect>(surface))
        throw std::invalid_argument(
            "u_cp: imaginary-frequency response undefined for PlasmonDirect");

    // xi = w10 t / (1 - t) maps the half-line onto (0, 1); the integrand
    // peaks near xi ~ w10 and is cut off by the e^{-2 xi z / c} tail.
    auto integrand = [&](double t) {
        if (t <= 0.0 || t >= 1.0)
            return 0.0;
        const double xi = atom.omega10 * t / (1.0 - t);
        const double jac = atom.omega10 / ((1.0 - t) * (1.0 - t));
        const double alpha = polarizability(atom, {0.0, xi});
        const GreensDiag g = scattering_green_imag(surface, z, xi, quad);
        return xi * xi * alpha * g.trace().real() * jac;
    };
    const double off_resonant = constants::hbar * constants::mu0 / (2.0 * constants::pi) *
                                integrate_adaptive<double>(integrand, 0.0, 1.0, quad, "u_cp");

    double resonant = 0.0;
    for (const auto& t : atom.downward_transitions) {
        const GreensDiag g = scattering_green_real(surface, z, t.omega, quad);
        resonant -= constants::mu0 / 3.0 * t.omega * t.omega * t.dipole * t.dipole *
                    g.trace().real();
    }
    return off_resonant + resonant;
}

/// Optical dipole potential. Uniform fields use -1/4 alpha(w_L) E^2 with the
/// two-level alpha; the evanescent geometry returns C0 P e^{-2z/z0}, which
/// agrees with the uniform route by construction of intensity_at.
inline double u_l(const AtomSpecies& atom, const LaserSpec& laser, double z) {
    validate(laser);
    if (!(z >= 0.0))
        throw std::invalid_argument("u_l: z must be non-negative");
    if (const auto* ev = std::get_if<EvanescentField>(&laser.field))
        return ev->c0 * ev->power * std::exp(-2.0 * z / ev->z0);
    const double alpha = polarizability_two_level(atom, laser.detuning);
    return -0.25 * alpha * field_squared(laser, atom, z);
}

/// Nonretarded laser-induced CP potential,
/// -w10^2 alpha_DC^2 I(z) Re(r_p) / (128 eps0^2 pi c Delta^2 z^3).
inline double u_lcp_nonretarded(const AtomSpecies& atom, const LaserSpec& laser, double re_rp,
                                double z) {
    validate(atom);
    if (!(z > 0.0))
        throw std::invalid_argument("u_lcp_nonretarded: z must be positive");
    if (laser.detuning == 0.0)
        throw std::invalid_argument("u_lcp_nonretarded: detuning must be nonzero");
    const double intensity = intensity_at(laser, atom, z);
    const double adc = alpha_dc(atom);
    const double num = atom.omega10 * atom.omega10 * adc * adc * intensity * re_rp;
    const double den = 128.0 * constants::eps0 * constants::eps0 * constants::pi * constants::c *
                       laser.detuning * laser.detuning * z * z * z;
    return -num / den;
}

/// Laser-induced CP potential from the real-frequency scattering tensor:
/// -(mu0 w_L^2 / 2) alpha^2 E^2 (sin^2(theta) Re gxx + cos^2(theta) Re gzz).
/// PlasmonDirect surfaces carry no retarded coefficients and dispatch to the
/// nonretarded tensor with Re r_p = sign * q.
inline double u_lcp(const AtomSpecies& atom, const SurfaceModel& surface, const LaserSpec& laser,
                    double z, const QuadratureConfig& quad,
                    PolarizabilityModel pol = PolarizabilityModel::two_level) {
    validate(atom);
    validate(surface);
    validate(laser);
    if (!(z > 0.0))
        throw std::invalid_argument("u_lcp: z must be positive");
    if (laser.detuning == 0.0)
        throw std::invalid_argument("u_lcp: detuning must be nonzero");
    const double omega_l = atom.omega10 + laser.detuning;
    const double alpha = pol == PolarizabilityModel::two_level
                             ? polarizability_two_level(atom, laser.detuning)
                             : polarizability(atom, {omega_l, 0.0});
    const double e2 = field_squared(laser, atom, z);
    if (e2 == 0.0)
        return 0.0;
    GreensDiag g;
    if (const auto* pd = std::get_if<PlasmonDirect>(&surface)) {
        g = scattering_green_nonretarded({pd->sign * pd->q, 0.0}, z, omega_l);
    } else {
        g = scattering_green_real(surface, z, omega_l, quad);
    }
    const double st = std::sin(laser.theta);
    const double ct = std::cos(laser.theta);
    const double projected = st * st * g.gxx.real() + ct * ct * g.gzz.real();
    return -0.5 * constants::mu0 * omega_l * omega_l * alpha * alpha * e2 * projected;
}

/// Relative residual of the product identity U_LCP hbar Delta = U_L U_CP Q
/// in the nonretarded regime, with U_CP = -C3/z^3 (perfect-conductor C3)
/// and Re(r_p) = re_rp_as_q. Zero-by-zero comparisons count as exact.
inline double identity_residual(const AtomSpecies& atom, const LaserSpec& laser,
                                double re_rp_as_q, double z) {
    const double lhs =
        u_lcp_nonretarded(atom, laser, re_rp_as_q, z) * constants::hbar * laser.detuning;
    const double rhs = u_l(atom, laser, z) *
                       u_cp_nonretarded(c3_perfect_conductor(atom), z) * re_rp_as_q;
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (scale == 0.0)
        return 0.0;
    return std::fabs(lhs - rhs) / scale;
}

/// All three potentials and their sum at one point, in the requested mode.
/// additive_only suppresses u_lcp for before/after comparisons.
inline PotentialComponents total_potential(const AtomSpecies& atom, const SurfaceModel& surface,
                                           const LaserSpec& laser, double z,
                                           const QuadratureConfig& quad, EvalMode mode,
                                           bool additive_only = false) {
    if (!(z > 0.0))
        throw std::invalid_argument("total_potential: z must be positive");
    PotentialComponents out{};
    const bool driven = intensity_at(laser, atom, z) != 0.0;
    if (mode == EvalMode::nonretarded) {
        out.u_cp = u_cp_nonretarded(c3_perfect_conductor(atom), z);
        out.u_l = driven ? u_l(atom, laser, z) : 0.0;
        if (!additive_only && driven) {
            const double omega_l = atom.omega10 + laser.detuning;
            const double re_rp = rp_nonretarded(surface, {omega_l, 0.0}).real();
            out.u_lcp = u_lcp_nonretarded(atom, laser, re_rp, z);
        }
    } else {
        if (std::holds_alternative<PlasmonDirect>(surface)) {
            // no imaginary-frequency response to integrate over
            out.u_cp = u_cp_nonretarded(c3_perfect_conductor(atom), z);
        } else {
            out.u_cp = u_cp(atom, surface, z, quad);
        }
        out.u_l = driven ? u_l(atom, laser, z) : 0.0;
        if (!additive_only && driven)
            out.u_lcp = u_lcp(atom, surface, laser, z, quad);
    }
    out.u_tot = out.u_cp + out.u_l + out.u_lcp;
    return out;
}

/// z-component of the force -dU/dz on an arbitrary potential evaluator,
/// central difference with one Richardson level.
template <typename F> double force_of(F&& potential, double z) {
    const double h = std::max(1e-4 * z, 1e-12);
    if (!(z - h > 0.0))
        throw std::domain_error("force_of: stencil would cross z <= 0");
    auto slope = [&](double step) {
        return (potential(z + step) - potential(z - step)) / (2.0 * step);
    };
    const double d1 = slope(h);
    const double d2 = slope(0.5 * h);
    return -(4.0 * d2 - d1) / 3.0;
}

/// Force on the total potential.
inline double force(const AtomSpecies& atom, const SurfaceModel& surface, const LaserSpec& laser,
                    double z, const QuadratureConfig& quad, EvalMode mode,
                    bool additive_only = false) {
    return force_of(
        [&](double zz) {
            return total_potential(atom, surface, laser, zz, quad, mode, additive_only).u_tot;
        },
        z);
}

} // namespace atompot

#endif
