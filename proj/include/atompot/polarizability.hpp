#ifndef ATOMPOT_POLARIZABILITY_HPP
#define ATOMPOT_POLARIZABILITY_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "atompot/constants.hpp"
#include "atompot/core.hpp"

namespace atompot {

/// Isotropic polarizability of the single-line atom (plus any downward
/// transitions), evaluated at real or purely imaginary frequency. The
/// result is real in both cases.
inline double polarizability(const AtomSpecies& atom, std::complex<double> omega) {
    validate(atom);
    if (omega.real() != 0.0 && omega.imag() != 0.0)
        throw std::invalid_argument("polarizability: omega must be real or purely imaginary");
    const double w2 = omega.real() * omega.real() - omega.imag() * omega.imag();
    double sum = 0.0;
    auto add_line = [&](double wk, double dk) {
        const double denom = wk * wk - w2;
        if (denom == 0.0)
            throw std::invalid_argument("polarizability: omega coincides with a transition pole");
        sum += wk * dk * dk / denom;
    };
    add_line(atom.omega10, atom.dipole);
    for (const auto& t : atom.downward_transitions)
        add_line(t.omega, t.dipole);
    return 2.0 / (3.0 * constants::hbar) * sum;
}

/// Two-level near-resonance form -alpha_DC * omega10 / (2 Delta). Warns by
/// returning normally even for moderately large |Delta|/omega10; only the
/// exact pole is an error.
inline double polarizability_two_level(const AtomSpecies& atom, double detuning) {
    validate(atom);
    if (detuning == 0.0)
        throw std::invalid_argument("polarizability_two_level: detuning must be nonzero");
    return -alpha_dc(atom) * atom.omega10 / (2.0 * detuning);
}

/// True when the small-detuning assumption behind the two-level form is
/// stretched (|Delta|/omega10 > 1%).
inline bool two_level_detuning_suspect(const AtomSpecies& atom, double detuning) {
    return std::fabs(detuning) / atom.omega10 > 0.01;
}

} // namespace atompot

#endif
