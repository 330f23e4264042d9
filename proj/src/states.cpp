#include "vbell/states.hpp"

#include <cmath>
#include <stdexcept>

namespace vbell
{
namespace
{
constexpr double on_shell_tol = 1e-8;

double checked_kp(ScalarStateSpec const& spec)
{
    double const kp = minkowski_dot(spec.k(), spec.p());
    if (kp == 0)
        throw std::domain_error("degenerate state: (k.p) = 0");
    return kp;
}
}  // namespace

//---------------------------------------------------------------------------//
ScalarStateSpec::ScalarStateSpec(double c, FourVector const& k,
                                 FourVector const& p, double mass)
    : c_(c), k_(k), p_(p), mass_(mass)
{
    if (!std::isfinite(c))
        throw std::domain_error("state parameter c must be finite");
    if (!(mass > 0))
        throw std::domain_error("mass must be positive");
    if (!is_on_shell(k, mass, on_shell_tol) || !is_on_shell(p, mass, on_shell_tol))
        throw std::domain_error("state momenta must be on shell with k0 > 0");
}

ScalarStateSpec ScalarStateSpec::general(double c, FourVector const& k,
                                         FourVector const& p, double mass)
{
    return ScalarStateSpec(c, k, p, mass);
}

ScalarStateSpec ScalarStateSpec::psi(FourVector const& k, FourVector const& p,
                                     double mass)
{
    return ScalarStateSpec(psi_c, k, p, mass);
}

ScalarStateSpec ScalarStateSpec::xi(FourVector const& k, FourVector const& p,
                                    double mass)
{
    return ScalarStateSpec(xi_c, k, p, mass);
}

ScalarStateSpec ScalarStateSpec::center_of_mass(double c, double x,
                                                Direction const& n, double mass)
{
    FourVector const k = momentum_from_x({x, n, mass});
    return ScalarStateSpec(c, k, parity_partner(k), mass);
}

//---------------------------------------------------------------------------//
AmplitudeMatrix amplitude(FourVector const& k, double mass)
{
    if (!(mass > 0))
        throw std::domain_error("mass must be positive");
    if (!(k.t > 0))
        throw std::domain_error("amplitude requires k0 > 0");
    if (!is_on_shell(k, mass, on_shell_tol))
        throw std::domain_error("amplitude requires an on-shell momentum");

    Vec3 const kv = k.spatial();
    Eigen::Matrix<double, 4, 3> boost;
    boost.row(0) = kv.transpose() / mass;
    boost.bottomRows<3>() = Eigen::Matrix3d::Identity()
                            + kv * kv.transpose() / (mass * (mass + k.t));

    AmplitudeMatrix result{boost.cast<Complex>() * v_matrix().transpose(), k,
                           mass};
    return result;
}

Real4x4 g_tensor(ScalarStateSpec const& spec)
{
    double const kp = checked_kp(spec);
    Eigen::Vector4d const kl = spec.k().lower();
    Eigen::Vector4d const pl = spec.p().lower();
    Real4x4 g = minkowski_metric();
    if (spec.c() != 0)
        g += (spec.c() / kp) * (kl * pl.transpose() + pl * kl.transpose());
    return g;
}

double normalization(ScalarStateSpec const& spec)
{
    double const kp = checked_kp(spec);
    double const m2 = spec.mass() * spec.mass();
    double const c = spec.c();
    double const bracket = c * m2 / kp - kp / m2 * (1 + c);
    return 2 + bracket * bracket;
}

double normalization_center_of_mass(double c, double x)
{
    if (!(x >= 0))
        throw std::domain_error("boost parameter x must be >= 0");
    double const num = 4 * x * (x + 1) * (c + 1) + 1;
    double const den = 2 * x + 1;
    return 2 + (num * num) / (den * den);
}

}  // namespace vbell
