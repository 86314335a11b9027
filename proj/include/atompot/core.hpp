#ifndef ATOMPOT_CORE_HPP
#define ATOMPOT_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "atompot/constants.hpp"

namespace atompot {

/// A downward transition entering the resonant part of the CP potential.
struct Transition {
    double omega;  // rad/s
    double dipole; // C m
};

/// Effective single-line atom. omega10 is the (already surface-shifted)
/// transition angular frequency; dipole is the transition dipole magnitude.
struct AtomSpecies {
    double omega10; // rad/s
    double dipole;  // C m
    std::vector<Transition> downward_transitions{};
};

inline void validate(const AtomSpecies& atom) {
    if (!(atom.omega10 > 0.0))
        throw std::invalid_argument("AtomSpecies: omega10 must be positive");
    if (!(atom.dipole > 0.0))
        throw std::invalid_argument("AtomSpecies: dipole must be positive");
    for (const auto& t : atom.downward_transitions)
        if (!(t.omega > 0.0) || !(t.dipole > 0.0))
            throw std::invalid_argument("AtomSpecies: invalid downward transition");
}

/// Static polarizability 2 d^2 / (3 hbar omega10), in C^2 m^2 / J.
inline double alpha_dc(const AtomSpecies& atom) {
    return 2.0 * atom.dipole * atom.dipole / (3.0 * constants::hbar * atom.omega10);
}

struct UniformField {
    double intensity; // W/m^2
};

struct EvanescentField {
    double c0;    // J/W
    double power; // W
    double z0;    // m (field-squared decay length; intensity ~ exp(-2 z / z0))
};

using FieldModel = std::variant<UniformField, EvanescentField>;

/// Laser drive: detuning Delta = omega_L - omega10, the field geometry and
/// the angle theta between the z-axis and the field orientation.
struct LaserSpec {
    double detuning; // rad/s
    FieldModel field;
    double theta; // rad, in [0, pi]
};

inline void validate(const LaserSpec& laser) {
    if (!(laser.theta >= 0.0 && laser.theta <= constants::pi))
        throw std::invalid_argument("LaserSpec: theta must lie in [0, pi]");
    if (const auto* u = std::get_if<UniformField>(&laser.field)) {
        if (!(u->intensity >= 0.0))
            throw std::invalid_argument("LaserSpec: intensity must be non-negative");
    } else {
        const auto& e = std::get<EvanescentField>(laser.field);
        if (!(e.power >= 0.0))
            throw std::invalid_argument("LaserSpec: power must be non-negative");
        if (!(e.z0 > 0.0))
            throw std::invalid_argument("LaserSpec: z0 must be positive");
    }
}

/// Potential components sampled on a z-grid. u_tot[i] is the exact
/// floating-point sum u_cp[i] + u_l[i] + u_lcp[i].
struct PotentialCurve {
    std::vector<double> z_grid; // m, strictly increasing, > 0
    std::vector<double> u_cp;   // J
    std::vector<double> u_l;    // J
    std::vector<double> u_lcp;  // J
    std::vector<double> u_tot;  // J
};

inline void validate(const PotentialCurve& curve) {
    const std::size_t n = curve.z_grid.size();
    if (curve.u_cp.size() != n || curve.u_l.size() != n || curve.u_lcp.size() != n ||
        curve.u_tot.size() != n)
        throw std::invalid_argument("PotentialCurve: column length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(curve.z_grid[i] > 0.0))
            throw std::invalid_argument("PotentialCurve: z_grid entries must be positive");
        if (i > 0 && !(curve.z_grid[i] > curve.z_grid[i - 1]))
            throw std::invalid_argument("PotentialCurve: z_grid must be strictly increasing");
        if (curve.u_tot[i] != curve.u_cp[i] + curve.u_l[i] + curve.u_lcp[i])
            throw std::invalid_argument("PotentialCurve: u_tot is not the component sum");
    }
}

enum class ExtremumKind { minimum, maximum };

inline const char* to_string(ExtremumKind k) {
    return k == ExtremumKind::minimum ? "minimum" : "maximum";
}

struct ExtremumRecord {
    double power;      // W
    ExtremumKind kind;
    double z_position; // m
    double value;      // J
};

} // namespace atompot

#endif
