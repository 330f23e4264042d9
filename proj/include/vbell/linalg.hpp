#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace vbell
{
//---------------------------------------------------------------------------//
// Fixed-size matrix types
//---------------------------------------------------------------------------//
using Complex = std::complex<double>;
using Complex3x3 = Eigen::Matrix<Complex, 3, 3>;
//! Rows: Lorentz index mu = 0..3. Columns: spin label in the order (+1, 0, -1).
using Complex4x3 = Eigen::Matrix<Complex, 4, 3>;
using Complex4x4 = Eigen::Matrix<Complex, 4, 4>;
using Real4x4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;

//---------------------------------------------------------------------------//
// Spin-projection outcomes
//---------------------------------------------------------------------------//
/*!
 * Outcome of a spin-1 projection measurement.
 *
 * The enumerator value is the row/column index used everywhere in the
 * library: index 0 is +1, index 1 is 0, index 2 is -1. This matches the
 * row order of the standard spin-1 matrices.
 */
enum class Outcome : int
{
    plus = 0,
    zero = 1,
    minus = 2
};

inline constexpr std::array<Outcome, 3> all_outcomes{
    Outcome::plus, Outcome::zero, Outcome::minus};

constexpr int index_of(Outcome o) { return static_cast<int>(o); }

//! Eigenvalue of the spin projection: +1, 0, -1.
constexpr int spin_value(Outcome o) { return 1 - static_cast<int>(o); }

//---------------------------------------------------------------------------//
/*!
 * A unit direction on the sphere, stored as polar angles.
 *
 * The Cartesian form is (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)).
 */
class Direction
{
  public:
    //! The +z direction.
    Direction();

    //! Strict constructor: theta in [0, pi], phi in [0, 2 pi).
    Direction(double theta, double phi);

    //! Any real angle pair, folded into range (theta reflected, phi wrapped).
    static Direction wrapped(double theta, double phi);

    //! Direction of a nonzero 3-vector.
    static Direction from_vector(Vec3 const& v);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Vec3 const& unit() const { return unit_; }

    double dot(Direction const& other) const { return unit_.dot(other.unit_); }

  private:
    double theta_;
    double phi_;
    Vec3 unit_;
};

//---------------------------------------------------------------------------//
// Constant matrices
//---------------------------------------------------------------------------//
struct SpinMatrices
{
    Complex3x3 s1;
    Complex3x3 s2;
    Complex3x3 s3;
};

// Standard spin-1 matrices in the (+1, 0, -1) basis
SpinMatrices const& spin_matrices();

// omega . S
Complex3x3 omega_dot_s(Direction const& omega);

//! Spectral projectors of omega . S for the eigenvalues +1, 0, -1.
struct SpinProjectors
{
    Complex3x3 plus;
    Complex3x3 zero;
    Complex3x3 minus;

    Complex3x3 const& operator[](Outcome o) const;
};

SpinProjectors spin_projectors(Direction const& omega);

//! Unitary V relating the spin-1 representation to rotations.
Complex3x3 const& v_matrix();

//! Minkowski metric diag(1, -1, -1, -1).
Real4x4 const& minkowski_metric();

//! True when |m - m^dagger| <= tol elementwise.
bool is_hermitian(Complex3x3 const& m, double tol = 0.0);

//! Largest elementwise modulus of a complex matrix.
template<class Derived>
double max_abs(Eigen::MatrixBase<Derived> const& m)
{
    return m.cwiseAbs().maxCoeff();
}

}  // namespace vbell
