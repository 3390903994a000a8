#pragma once

#include <numbers>

// Internal unit system: lengths in nm, energies in keV, angles in mrad,
// rates in units of the natural linewidth gamma0. Conversion between energy
// and wavenumber via hbar*c; Heaviside-Lorentz natural units with mu0 = 1,
// so the coupling prefactors of the effective two-level parameters are
// dimensionless after conversion.

namespace nucav::units {

inline constexpr double hbar_c_keV_nm = 0.1973269804;  // hbar*c [keV nm]
inline constexpr double half_pi_mrad = 1570.7963267948966;  // pi/2 in mrad

/// Vacuum wavenumber [1/nm] of a photon of the given energy [keV].
inline constexpr double wavenumber(double energy_keV) {
    return energy_keV / hbar_c_keV_nm;
}

/// Natural linewidth [1/nm equivalent] from neV.
inline constexpr double rate_from_neV(double neV) {
    return neV * 1e-12 / hbar_c_keV_nm;
}

inline constexpr double rad_from_mrad(double mrad) { return mrad * 1e-3; }
inline constexpr double mrad_from_rad(double rad) { return rad * 1e3; }

}  // namespace nucav::units
