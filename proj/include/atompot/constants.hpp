#ifndef ATOMPOT_CONSTANTS_HPP
#define ATOMPOT_CONSTANTS_HPP

#include <numbers>

namespace atompot::constants {

inline constexpr double pi = std::numbers::pi_v<double>;

// CODATA 2018. h and c are exact by definition; eps0 is the recommended
// value and mu0 is derived from it so that mu0*eps0*c^2 == 1 holds to
// machine precision.
inline constexpr double planck = 6.62607015e-34;        // J s
inline constexpr double hbar = planck / (2.0 * pi);     // J s
inline constexpr double c = 299792458.0;                // m/s
inline constexpr double eps0 = 8.8541878128e-12;        // F/m
inline constexpr double mu0 = 1.0 / (eps0 * c * c);     // N/A^2

} // namespace atompot::constants

namespace atompot {

struct PhysicalConstants {
    double hbar = constants::hbar; // J s
    double eps0 = constants::eps0; // F/m
    double mu0 = constants::mu0;   // N/A^2
    double c = constants::c;       // m/s
};

} // namespace atompot

#endif
