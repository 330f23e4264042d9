#include "vbell/oracle_nonrel.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace vbell::oracle
{
namespace
{
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;
using Vector9 = Eigen::Matrix<Complex, 9, 1>;

//! Spin-1 components from S+|m> = sqrt(2 - m(m+1)) |m+1>, basis (+1, 0, -1).
std::array<Complex3x3, 3> ladder_spin()
{
    Complex3x3 raise = Complex3x3::Zero();
    // index 0 <-> m=+1, 1 <-> m=0, 2 <-> m=-1
    for (int col = 1; col < 3; ++col)
    {
        int const m = 1 - col;
        raise(col - 1, col) = std::sqrt(2.0 - m * (m + 1));
    }
    Complex3x3 const lower = raise.adjoint();
    Complex const i(0, 1);
    Complex3x3 sz = Complex3x3::Zero();
    sz(0, 0) = 1;
    sz(2, 2) = -1;
    return {0.5 * (raise + lower), (raise - lower) / (2.0 * i), sz};
}

Complex3x3 spin_along(Direction const& w)
{
    static auto const s = ladder_spin();
    return w.unit().x() * s[0] + w.unit().y() * s[1] + w.unit().z() * s[2];
}

//! Rank-one projectors onto the eigenvectors for +1, 0, -1.
std::array<Complex3x3, 3> eigen_projectors(Direction const& w)
{
    Eigen::SelfAdjointEigenSolver<Complex3x3> solver(spin_along(w));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    // Eigenvalues ascending: -1, 0, +1
    std::array<Complex3x3, 3> result;
    for (int k = 0; k < 3; ++k)
    {
        auto const v = solver.eigenvectors().col(k);
        result[2 - k] = v * v.adjoint();
    }
    return result;
}

Vector9 as_vector(QutritPairState const& s)
{
    Vector9 v;
    for (int i = 0; i < 9; ++i)
        v(i) = s.amplitudes[i];
    return v;
}

Matrix9 kron(Complex3x3 const& a, Complex3x3 const& b)
{
    Matrix9 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return r;
}
}  // namespace

double QutritPairState::norm() const
{
    double s = 0;
    for (Complex const& z : amplitudes)
        s += std::norm(z);
    return std::sqrt(s);
}

QutritPairState singlet()
{
    double const r = 1 / std::sqrt(3.0);
    QutritPairState s;
    s(Outcome::plus, Outcome::minus) = r;
    s(Outcome::zero, Outcome::zero) = -r;
    s(Outcome::minus, Outcome::plus) = r;
    return s;
}

ProbabilityTable joint_probs(QutritPairState const& state, Direction const& a,
                             Direction const& b)
{
    if (std::abs(state.norm() - 1) > 1e-12)
        throw std::invalid_argument("oracle state must be normalized");
    auto const pa = eigen_projectors(a);
    auto const pb = eigen_projectors(b);
    Vector9 const psi = as_vector(state);

    ProbabilityTable::Entries e{};
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            Complex const amp = psi.dot(kron(pa[i], pb[j]) * psi);
            e[i][j] = amp.real();
        }
    }
    return ProbabilityTable(e, {0.0, a, b}).checked();
}

double total_spin_projection(QutritPairState const& state, Direction const& omega)
{
    Complex3x3 const s = spin_along(omega);
    Complex3x3 const id = Complex3x3::Identity();
    Vector9 const psi = as_vector(state);
    return psi.dot((kron(s, id) + kron(id, s)) * psi).real();
}

}  // namespace vbell::oracle
