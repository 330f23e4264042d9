#include "vbell/localization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vbell/constants.hpp"

namespace vbell
{
void LocalizationParams::validate() const
{
    if (!(edge_length > 0) || !std::isfinite(edge_length))
        throw std::domain_error("detector edge length must be positive");
    if (!(compton_reduced > 0) || !std::isfinite(compton_reduced))
        throw std::domain_error("Compton wavelength must be positive");
    if (!(gamma >= 1) || !std::isfinite(gamma))
        throw std::domain_error("Lorentz factor must be >= 1");
}

double scaling_factor(LocalizationParams const& params)
{
    params.validate();
    return params.edge_length / (2 * params.effective_wavelength());
}

double sinc(double z)
{
    // Taylor branch below where sin(z)/z loses accuracy
    if (std::abs(z) < 1e-4)
        return 1 - z * z / 6;
    return std::sin(z) / z;
}

double delta_cube_axis(double u, LocalizationParams const& params)
{
    double const tau = scaling_factor(params);
    return tau / std::numbers::pi * sinc(tau * u);
}

CubeKernel delta_cube(Vec3 const& dp, LocalizationParams const& params)
{
    CubeKernel k;
    k.prefactor = std::pow(params.effective_wavelength() / constants::hbar, 3);
    k.shape = delta_cube_axis(dp.x(), params) * delta_cube_axis(dp.y(), params)
              * delta_cube_axis(dp.z(), params);
    return k;
}

}  // namespace vbell
