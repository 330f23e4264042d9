#include "vbell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vbell
{
namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;

Vec3 cartesian(double theta, double phi)
{
    return {std::cos(phi) * std::sin(theta),
            std::sin(phi) * std::sin(theta),
            std::cos(theta)};
}

double wrap_angle(double phi)
{
    double r = std::fmod(phi, two_pi);
    if (r < 0)
        r += two_pi;
    if (r >= two_pi)
        r = 0;
    return r;
}
}  // namespace

//---------------------------------------------------------------------------//
Direction::Direction() : theta_(0), phi_(0), unit_(0, 0, 1) {}

Direction::Direction(double theta, double phi)
    : theta_(theta), phi_(phi), unit_(cartesian(theta, phi))
{
    if (!(theta >= 0 && theta <= std::numbers::pi) || !(phi >= 0 && phi < two_pi))
    {
        throw std::domain_error("direction angles out of range: theta="
                                + std::to_string(theta)
                                + ", phi=" + std::to_string(phi));
    }
}

Direction Direction::wrapped(double theta, double phi)
{
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::domain_error("direction angles must be finite");
    double t = wrap_angle(theta);
    if (t > std::numbers::pi)
    {
        // (theta, phi) and (2 pi - theta, phi + pi) are the same point
        t = two_pi - t;
        phi += std::numbers::pi;
    }
    return Direction(t, wrap_angle(phi));
}

Direction Direction::from_vector(Vec3 const& v)
{
    double const r = v.norm();
    if (!(r > 0) || !std::isfinite(r))
        throw std::domain_error("direction from zero or non-finite vector");
    double const theta = std::acos(std::clamp(v.z() / r, -1.0, 1.0));
    double const phi = wrap_angle(std::atan2(v.y(), v.x()));
    Direction d(theta, phi);
    // Keep the exact input orientation rather than the re-derived one
    d.unit_ = v / r;
    return d;
}

//---------------------------------------------------------------------------//
SpinMatrices const& spin_matrices()
{
    static SpinMatrices const result = [] {
        Complex const h(1 / std::sqrt(2.0), 0);
        Complex const ih(0, 1 / std::sqrt(2.0));
        SpinMatrices s;
        s.s1 << 0, h, 0,
                h, 0, h,
                0, h, 0;
        s.s2 << 0, -ih, 0,
                ih, 0, -ih,
                0, ih, 0;
        s.s3 << 1, 0, 0,
                0, 0, 0,
                0, 0, -1;
        return s;
    }();
    return result;
}

Complex3x3 omega_dot_s(Direction const& omega)
{
    auto const& s = spin_matrices();
    Vec3 const& w = omega.unit();
    return w.x() * s.s1 + w.y() * s.s2 + w.z() * s.s3;
}

Complex3x3 const& SpinProjectors::operator[](Outcome o) const
{
    switch (o)
    {
        case Outcome::plus:
            return plus;
        case Outcome::zero:
            return zero;
        case Outcome::minus:
            return minus;
    }
    throw std::logic_error("invalid outcome");
}

SpinProjectors spin_projectors(Direction const& omega)
{
    Complex3x3 const ws = omega_dot_s(omega);
    Complex3x3 const ws2 = ws * ws;
    SpinProjectors p;
    p.plus = 0.5 * (ws2 + ws);
    p.minus = 0.5 * (ws2 - ws);
    p.zero = Complex3x3::Identity() - ws2;
    return p;
}

Complex3x3 const& v_matrix()
{
    static Complex3x3 const result = [] {
        double const r = 1 / std::sqrt(2.0);
        Complex const i(0, 1);
        Complex3x3 v;
        v << -r, i * r, 0,
             0, 0, 1,
             r, i * r, 0;
        return v;
    }();
    return result;
}

Real4x4 const& minkowski_metric()
{
    static Real4x4 const eta = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
    return eta;
}

bool is_hermitian(Complex3x3 const& m, double tol)
{
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                return false;
        }
    }
    return true;
}

}  // namespace vbell
