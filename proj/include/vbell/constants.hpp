#pragma once

// CODATA 2018 values, SI units.
namespace vbell::constants
{
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double speed_of_light = 299792458.0;      // m / s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double muon_mass = 1.883531627e-28;       // kg

//! hbar / (m c)
constexpr double reduced_compton_wavelength(double mass_kg)
{
    return hbar / (mass_kg * speed_of_light);
}

}  // namespace vbell::constants
