#pragma once

#include <numbers>

namespace msurf::phys {

// SI, CODATA 2018 exact where defined
inline constexpr double c = 299792458.0;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double e_charge = 1.602176634e-19;
inline constexpr double mu0 = 1.25663706212e-6;
inline constexpr double eps0 = 1.0 / (mu0 * c * c);
inline constexpr double Z0 = mu0 * c;
inline constexpr double pi = std::numbers::pi;

// 1 eV of photon energy as an angular frequency [rad/s]
inline constexpr double eV_to_rad_s = e_charge / hbar;
// energy per area: meV/Å^2 -> J/m^2
inline constexpr double meV_per_A2 = 1e-3 * e_charge / 1e-20;

} // namespace msurf::phys
