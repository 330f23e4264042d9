#include "vbell/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace vbell
{
FourVector FourVector::on_shell(double mass, Vec3 const& momentum)
{
    if (!(mass > 0))
        throw std::domain_error("mass must be positive");
    double const energy = std::sqrt(momentum.squaredNorm() + mass * mass);
    return {energy, momentum.x(), momentum.y(), momentum.z()};
}

FourVector momentum_from_x(KinematicConfig const& cfg)
{
    if (!(cfg.x_param >= 0) || !std::isfinite(cfg.x_param))
        throw std::domain_error("boost parameter x must be >= 0");
    if (!(cfg.mass > 0))
        throw std::domain_error("mass must be positive");
    double const m = cfg.mass;
    Vec3 const k = m * std::sqrt(cfg.x_param) * cfg.n.unit();
    return {m * std::sqrt(1 + cfg.x_param), k.x(), k.y(), k.z()};
}

FourVector parity_partner(FourVector const& k)
{
    return {k.t, -k.x, -k.y, -k.z};
}

double minkowski_dot(FourVector const& u, FourVector const& v)
{
    return u.t * v.t - (u.x * v.x + u.y * v.y + u.z * v.z);
}

bool is_on_shell(FourVector const& k, double mass, double tol)
{
    double const m2 = mass * mass;
    return k.t > 0 && std::abs(minkowski_dot(k, k) - m2) <= tol * m2;
}

}  // namespace vbell
