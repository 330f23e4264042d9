#pragma once

#include <Eigen/Core>

#include "linalg.hpp"

namespace vbell
{
//---------------------------------------------------------------------------//
/*!
 * Contravariant Minkowski four-vector (t, x, y, z), signature (+, -, -, -).
 *
 * Natural units: all components carry units of mass.
 */
struct FourVector
{
    double t{0};
    double x{0};
    double y{0};
    double z{0};

    Vec3 spatial() const { return {x, y, z}; }

    //! Components with the index raised (as stored).
    Eigen::Vector4d upper() const { return {t, x, y, z}; }

    //! Components with the index lowered by the metric.
    Eigen::Vector4d lower() const { return {t, -x, -y, -z}; }

    //! On-shell vector with the given mass and three-momentum.
    static FourVector on_shell(double mass, Vec3 const& momentum);
};

//---------------------------------------------------------------------------//
//! Center-of-mass shorthand: |k|^2 = x m^2 along direction n.
struct KinematicConfig
{
    double x_param{0};
    Direction n{};
    double mass{1};
};

FourVector momentum_from_x(KinematicConfig const& cfg);

//! (k0, -k)
FourVector parity_partner(FourVector const& k);

double minkowski_dot(FourVector const& u, FourVector const& v);

//! |k.k - m^2| <= tol * m^2 and k0 > 0
bool is_on_shell(FourVector const& k, double mass, double tol = 1e-8);

}  // namespace vbell
