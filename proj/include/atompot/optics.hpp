#ifndef ATOMPOT_OPTICS_HPP
#define ATOMPOT_OPTICS_HPP

#include <cmath>
#include <stdexcept>
#include <variant>

#include "atompot/constants.hpp"
#include "atompot/core.hpp"
#include "atompot/polarizability.hpp"

namespace atompot {

/// Laser intensity at height z. For the evanescent geometry the intensity
/// is defined so that U_L = -1/4 alpha(w_L) E^2 reproduces
/// U_L(z) = C0 P exp(-2 z / z0) exactly, with the two-level alpha; this
/// requires blue detuning (Delta > 0), since the barrier is repulsive.
inline double intensity_at(const LaserSpec& laser, const AtomSpecies& atom, double z) {
    validate(laser);
    if (!(z >= 0.0))
        throw std::invalid_argument("intensity_at: z must be non-negative");
    if (const auto* u = std::get_if<UniformField>(&laser.field))
        return u->intensity;
    const auto& ev = std::get<EvanescentField>(laser.field);
    if (ev.power == 0.0)
        return 0.0;
    if (!(laser.detuning > 0.0))
        throw std::invalid_argument(
            "intensity_at: inconsistent sign: evanescent barrier requires blue detuning");
    const double u_l = ev.c0 * ev.power * std::exp(-2.0 * z / ev.z0);
    const double alpha = polarizability_two_level(atom, laser.detuning);
    // U_L = -1/4 alpha E^2 and I = 1/2 eps0 c E^2  =>  I = -2 eps0 c U_L / alpha
    return -2.0 * constants::eps0 * constants::c * u_l / alpha;
}

/// Peak field amplitude squared, 2 I / (eps0 c). The cycle-average factor
/// lives in the potential formulas, not here.
inline double field_squared(const LaserSpec& laser, const AtomSpecies& atom, double z) {
    return 2.0 * intensity_at(laser, atom, z) / (constants::eps0 * constants::c);
}

} // namespace atompot

#endif
