#ifndef ATOMPOT_MATERIAL_HPP
#define ATOMPOT_MATERIAL_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

#include "atompot/constants.hpp"

namespace atompot {

using complexd = std::complex<double>;

/// Idealized mirror: r_s = -1, r_p = +1 for every frequency and wavevector.
struct PerfectMirror {};

/// Non-dispersive dielectric half-space, eps >= 1.
struct ConstantEps {
    double eps;
};

/// Single-resonance Drude-Lorentz half-space (no eps_infinity offset):
/// eps(w) = 1 + omegaP^2 / (omega0^2 - w^2 - i gamma w).
struct DrudeLorentz {
    double omega0; // rad/s
    double omegaP; // rad/s
    double gamma;  // rad/s
};

/// Direct plasmonic specification Re(r_p) = sign * q, used by the
/// nonretarded formulas only.
struct PlasmonDirect {
    double q;
    int sign; // +1 or -1
};

using SurfaceModel = std::variant<PerfectMirror, ConstantEps, DrudeLorentz, PlasmonDirect>;

inline void validate(const SurfaceModel& surface) {
    if (const auto* ce = std::get_if<ConstantEps>(&surface)) {
        if (!(ce->eps >= 1.0))
            throw std::invalid_argument("ConstantEps: eps must be >= 1");
    } else if (const auto* dl = std::get_if<DrudeLorentz>(&surface)) {
        if (!(dl->gamma > 0.0))
            throw std::invalid_argument("DrudeLorentz: gamma must be positive");
        if (!(dl->omega0 >= 0.0) || !(dl->omegaP >= 0.0))
            throw std::invalid_argument("DrudeLorentz: frequencies must be non-negative");
    } else if (const auto* pd = std::get_if<PlasmonDirect>(&surface)) {
        if (!(pd->q > 0.0))
            throw std::invalid_argument("PlasmonDirect: q must be positive");
        if (pd->sign != 1 && pd->sign != -1)
            throw std::invalid_argument("PlasmonDirect: sign must be +1 or -1");
    }
}

/// Relative permittivity at real or purely imaginary frequency. On the
/// imaginary axis (omega = i xi) the Drude-Lorentz result is real and >= 1.
inline complexd permittivity(const SurfaceModel& surface, complexd omega) {
    if (const auto* ce = std::get_if<ConstantEps>(&surface))
        return {ce->eps, 0.0};
    if (const auto* dl = std::get_if<DrudeLorentz>(&surface)) {
        const complexd denom =
            dl->omega0 * dl->omega0 - omega * omega - complexd(0.0, dl->gamma) * omega;
        return 1.0 + dl->omegaP * dl->omegaP / denom;
    }
    throw std::invalid_argument("permittivity: no permittivity defined for this surface model");
}

/// Electrostatic-limit p reflection coefficient (eps - 1)/(eps + 1);
/// PerfectMirror gives 1 and PlasmonDirect gives sign * q.
inline complexd rp_nonretarded(const SurfaceModel& surface, complexd omega) {
    if (std::holds_alternative<PerfectMirror>(surface))
        return {1.0, 0.0};
    if (const auto* pd = std::get_if<PlasmonDirect>(&surface))
        return {pd->sign * pd->q, 0.0};
    const complexd eps = permittivity(surface, omega);
    return (eps - 1.0) / (eps + 1.0);
}

struct FresnelPair {
    complexd rs;
    complexd rp;
};

namespace detail {

// Perpendicular wavevector sqrt(eps w^2/c^2 - kpar^2) on the branch Im >= 0.
inline complexd kz_branch(complexd eps, complexd omega, double k_parallel) {
    const complexd arg = eps * omega * omega / (constants::c * constants::c) -
                         complexd(k_parallel * k_parallel, 0.0);
    complexd kz = std::sqrt(arg);
    if (kz.imag() < 0.0)
        kz = -kz;
    return kz;
}

} // namespace detail

/// Half-space Fresnel coefficients (vacuum above, medium below) at real or
/// purely imaginary frequency.
inline FresnelPair fresnel(const SurfaceModel& surface, complexd omega, double k_parallel) {
    if (k_parallel < 0.0)
        throw std::invalid_argument("fresnel: k_parallel must be non-negative");
    if (std::holds_alternative<PerfectMirror>(surface))
        return {{-1.0, 0.0}, {1.0, 0.0}};
    if (std::holds_alternative<PlasmonDirect>(surface))
        throw std::invalid_argument("fresnel: retarded coefficients undefined for PlasmonDirect");
    const complexd eps = permittivity(surface, omega);
    const complexd kz1 = detail::kz_branch({1.0, 0.0}, omega, k_parallel);
    const complexd kz2 = detail::kz_branch(eps, omega, k_parallel);
    return {(kz1 - kz2) / (kz1 + kz2), (eps * kz1 - kz2) / (eps * kz1 + kz2)};
}

/// Plasmonic quality factor Q = omega_S / (2 gamma) with
/// omega_S = sqrt(omega0^2 + omegaP^2 / 2). Drude-Lorentz only.
inline double quality_factor(const SurfaceModel& surface) {
    const auto* dl = std::get_if<DrudeLorentz>(&surface);
    if (dl == nullptr)
        throw std::invalid_argument("quality_factor: Q undefined for this model");
    const double omega_s = std::sqrt(dl->omega0 * dl->omega0 + 0.5 * dl->omegaP * dl->omegaP);
    return omega_s / (2.0 * dl->gamma);
}

} // namespace atompot

#endif
