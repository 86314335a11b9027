#ifndef ATOMPOT_GREENS_HPP
#define ATOMPOT_GREENS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "atompot/constants.hpp"
#include "atompot/material.hpp"
#include "atompot/quadrature.hpp"

namespace atompot {

/// Diagonal of the scattering Green's tensor at coincident points above a
/// planar half-space, units 1/m. gxx == gyy by symmetry.
///
/// Convention: the nonretarded (electrostatic image) limit is
///   gxx = gyy = c^2 r_p / (32 pi w^2 z^3),  gzz = 2 gxx,
/// which makes the potential formulas of this library close exactly onto
/// their z^-3 limits.
struct GreensDiag {
    complexd gxx;
    complexd gyy;
    complexd gzz;

    complexd trace() const { return gxx + gyy + gzz; }
};

/// Electrostatic image-limit tensor for a given (possibly complex) r_p.
inline GreensDiag scattering_green_nonretarded(complexd rp, double z, double omega) {
    if (!(z > 0.0))
        throw std::invalid_argument("scattering_green_nonretarded: z must be positive");
    if (!(omega > 0.0))
        throw std::invalid_argument("scattering_green_nonretarded: omega must be positive");
    const complexd gxx = constants::c * constants::c * rp /
                         (32.0 * constants::pi * omega * omega * z * z * z);
    return {gxx, gxx, 2.0 * gxx};
}

/// Closed-form perfect-mirror tensor at real frequency (image solution).
inline GreensDiag perfect_mirror_green_real(double z, double omega) {
    const double phi = 2.0 * omega * z / constants::c;
    const complexd iphi{0.0, phi};
    const complexd expf = std::exp(iphi);
    const double phi2 = phi * phi;
    const complexd gxx = -(expf / (8.0 * constants::pi * z)) * (1.0 + (iphi - 1.0) / phi2);
    const complexd gzz = (expf / (4.0 * constants::pi * z)) * (1.0 - iphi) / phi2;
    return {gxx, gxx, gzz};
}

/// Closed-form perfect-mirror tensor at imaginary frequency; components real.
inline GreensDiag perfect_mirror_green_imag(double z, double xi) {
    const double phi = 2.0 * xi * z / constants::c;
    const double damp = std::exp(-phi);
    const double phi2 = phi * phi;
    const double gxx = -(damp / (8.0 * constants::pi * z)) * (1.0 + (1.0 + phi) / phi2);
    const double gzz = -(damp / (4.0 * constants::pi * z)) * (1.0 + phi) / phi2;
    return {complexd{gxx, 0.0}, complexd{gxx, 0.0}, complexd{gzz, 0.0}};
}

namespace detail {

// e^{-2 kappa z} tail truncation: keep integrating until the damping factor
// has fallen by 1e-16 relative to its peak.
inline double tail_cutoff(double z, const QuadratureConfig& quad) {
    return quad.freq_cutoff_factor * (-std::log(1e-16)) / (2.0 * z);
}

// Two-pass evaluation of a sum of complex integrals. The first pass uses the
// caller's relative tolerance per sector; the second pins every sector to an
// absolute tolerance derived from the assembled result, so cancellation
// between sectors (or between real and imaginary parts) cannot silently
// amplify the relative error of the component the potentials consume, Re G.
template <typename F1, typename F2>
complexd integrate_sector_sum(F1&& f1, double a1, double b1, F2&& f2, double a2, double b2,
                              const QuadratureConfig& quad, const char* what) {
    auto parts = [&](const QuadratureConfig& q) {
        const double re1 =
            integrate_adaptive<double>([&](double x) { return f1(x).real(); }, a1, b1, q, what);
        const double im1 =
            integrate_adaptive<double>([&](double x) { return f1(x).imag(); }, a1, b1, q, what);
        const double re2 =
            integrate_adaptive<double>([&](double x) { return f2(x).real(); }, a2, b2, q, what);
        const double im2 =
            integrate_adaptive<double>([&](double x) { return f2(x).imag(); }, a2, b2, q, what);
        return complexd{re1 + re2, im1 + im2};
    };
    const complexd estimate = parts(quad);
    const double mag = std::abs(estimate);
    if (mag == 0.0)
        return estimate;
    // per-component budget, floored so a component passing through zero does
    // not demand unbounded refinement
    auto budget = [&](double comp) {
        return 0.25 * quad.rel_tol * std::max(std::fabs(comp), 1e-3 * mag);
    };
    QuadratureConfig pinned = quad;
    pinned.rel_tol = 1e-300; // absolute control only on the second pass
    auto component = [&](auto&& projector, double comp_estimate) {
        pinned.abs_tol = budget(comp_estimate);
        return integrate_adaptive<double>([&](double x) { return projector(f1(x)); }, a1, b1,
                                          pinned, what) +
               integrate_adaptive<double>([&](double x) { return projector(f2(x)); }, a2, b2,
                                          pinned, what);
    };
    return {component([](complexd v) { return v.real(); }, estimate.real()),
            component([](complexd v) { return v.imag(); }, estimate.imag())};
}

} // namespace detail

/// Sommerfeld-integral evaluation at real frequency, split at k_par = w/c
/// into propagating and evanescent sectors. Works for any surface that
/// supports fresnel().
inline GreensDiag scattering_green_real_quadrature(const SurfaceModel& surface, double z,
                                                   double omega, const QuadratureConfig& quad) {
    if (!(z > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("scattering_green_real: require z > 0 and omega > 0");
    validate(quad);
    const double k1 = omega / constants::c;
    const complexd w{omega, 0.0};

    // propagating sector, k_par = k1 sin(u); the substitution removes the
    // 1/k_z square-root feature at k_par = k1
    const complexd i_unit{0.0, 1.0};
    auto prop_xx = [&](double u) {
        const double s = std::sin(u);
        const double cu = std::cos(u);
        const auto [rs, rp] = fresnel(surface, w, k1 * s);
        return s * (rs - cu * cu * rp) * std::exp(i_unit * (2.0 * k1 * z * cu));
    };
    auto prop_zz = [&](double u) {
        const double s = std::sin(u);
        const double cu = std::cos(u);
        const auto [rs, rp] = fresnel(surface, w, k1 * s);
        return s * s * s * rp * std::exp(i_unit * (2.0 * k1 * z * cu));
    };
    const double half_pi = 0.5 * constants::pi;
    const complexd pref_prop_xx = i_unit * k1 / (8.0 * constants::pi);
    const complexd pref_prop_zz = i_unit * k1 / (4.0 * constants::pi);

    // evanescent sector, k_z = i kappa
    const double kappa_max = detail::tail_cutoff(z, quad);
    const double pref_evan_xx = 1.0 / (8.0 * constants::pi * k1 * k1);
    const double pref_evan_zz = 1.0 / (4.0 * constants::pi * k1 * k1);
    auto evan_xx = [&](double kappa) {
        const double kpar = std::hypot(k1, kappa);
        const auto [rs, rp] = fresnel(surface, w, kpar);
        return (k1 * k1 * rs + kappa * kappa * rp) * std::exp(-2.0 * kappa * z);
    };
    auto evan_zz = [&](double kappa) {
        const double kpar = std::hypot(k1, kappa);
        const auto [rs, rp] = fresnel(surface, w, kpar);
        return (k1 * k1 + kappa * kappa) * rp * std::exp(-2.0 * kappa * z);
    };

    const complexd gxx = detail::integrate_sector_sum(
        [&](double u) { return pref_prop_xx * prop_xx(u); }, 0.0, half_pi,
        [&](double kappa) { return pref_evan_xx * evan_xx(kappa); }, 0.0, kappa_max, quad,
        "green_real.xx");
    const complexd gzz = detail::integrate_sector_sum(
        [&](double u) { return pref_prop_zz * prop_zz(u); }, 0.0, half_pi,
        [&](double kappa) { return pref_evan_zz * evan_zz(kappa); }, 0.0, kappa_max, quad,
        "green_real.zz");
    return {gxx, gxx, gzz};
}

/// Real-frequency scattering tensor. PerfectMirror dispatches to the
/// analytic image solution; everything else goes through the Sommerfeld
/// integral.
inline GreensDiag scattering_green_real(const SurfaceModel& surface, double z, double omega,
                                        const QuadratureConfig& quad) {
    if (std::holds_alternative<PerfectMirror>(surface)) {
        if (!(z > 0.0) || !(omega > 0.0))
            throw std::invalid_argument("scattering_green_real: require z > 0 and omega > 0");
        return perfect_mirror_green_real(z, omega);
    }
    return scattering_green_real_quadrature(surface, z, omega, quad);
}

/// Imaginary-frequency Sommerfeld integral; the integrand is exponentially
/// damped and needs no oscillatory split. Components come out real.
inline GreensDiag scattering_green_imag_quadrature(const SurfaceModel& surface, double z,
                                                   double xi, const QuadratureConfig& quad) {
    if (!(z > 0.0) || !(xi > 0.0))
        throw std::invalid_argument("scattering_green_imag: require z > 0 and xi > 0");
    validate(quad);
    const double xi_c = xi / constants::c;
    const complexd w{0.0, xi};
    const double kappa_lo = xi_c;
    const double kappa_hi = xi_c + detail::tail_cutoff(z, quad);
    auto f_xx = [&](double kappa) {
        const double kpar2 = kappa * kappa - xi_c * xi_c;
        const double kpar = kpar2 > 0.0 ? std::sqrt(kpar2) : 0.0;
        const auto [rs, rp] = fresnel(surface, w, kpar);
        const double ck_xi = constants::c * kappa / xi;
        return ((rs - ck_xi * ck_xi * rp) * std::exp(-2.0 * kappa * z)).real();
    };
    auto f_zz = [&](double kappa) {
        const double kpar2 = kappa * kappa - xi_c * xi_c;
        const double kpar = kpar2 > 0.0 ? std::sqrt(kpar2) : 0.0;
        const auto [rs, rp] = fresnel(surface, w, kpar);
        return ((kappa * kappa - xi_c * xi_c) * rp * std::exp(-2.0 * kappa * z)).real();
    };
    const double gxx =
        integrate_adaptive<double>(f_xx, kappa_lo, kappa_hi, quad, "green_imag.xx") /
        (8.0 * constants::pi);
    const double gzz =
        -constants::c * constants::c / (4.0 * constants::pi * xi * xi) *
        integrate_adaptive<double>(f_zz, kappa_lo, kappa_hi, quad, "green_imag.zz");
    return {complexd{gxx, 0.0}, complexd{gxx, 0.0}, complexd{gzz, 0.0}};
}

/// Imaginary-frequency scattering tensor with perfect-mirror fast path.
inline GreensDiag scattering_green_imag(const SurfaceModel& surface, double z, double xi,
                                        const QuadratureConfig& quad) {
    if (std::holds_alternative<PerfectMirror>(surface)) {
        if (!(z > 0.0) || !(xi > 0.0))
            throw std::invalid_argument("scattering_green_imag: require z > 0 and xi > 0");
        return perfect_mirror_green_imag(z, xi);
    }
    return scattering_green_imag_quadrature(surface, z, xi, quad);
}

} // namespace atompot

#endif
