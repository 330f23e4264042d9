#pragma once

#include "linalg.hpp"

namespace vbell
{
/*!
 * Cube-shaped detector of edge l for a particle with reduced Compton
 * wavelength lambda = hbar / (m c), in meters.
 *
 * A particle with Lorentz factor gamma has the effective wavelength
 * lambda / gamma.
 */
struct LocalizationParams
{
    double edge_length{0};
    double compton_reduced{0};
    double gamma{1};

    //! Throws std::domain_error unless l > 0, lambda > 0 and gamma >= 1.
    void validate() const;

    double effective_wavelength() const { return compton_reduced / gamma; }
};

//! tau = l / (2 lambda_eff)
double scaling_factor(LocalizationParams const& params);

//! sin(z) / z with sinc(0) = 1
double sinc(double z);

/*!
 * Cube localization kernel split into its dimensional prefactor
 * (lambda / hbar)^3 and the dimensionless shape
 *   prod_j (tau / pi) sinc(tau dp_j),
 * with dp_j the momentum difference in units of m c.
 */
struct CubeKernel
{
    double prefactor{0};
    double shape{0};
};

CubeKernel delta_cube(Vec3 const& dp, LocalizationParams const& params);

//! One-axis factor (tau / pi) sinc(tau u) of the kernel shape.
double delta_cube_axis(double u, LocalizationParams const& params);

}  // namespace vbell
