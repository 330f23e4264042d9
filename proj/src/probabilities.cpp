#include "vbell/probabilities.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace vbell
{
namespace
{
//! Scalar products entering every center-of-mass formula.
struct Geometry
{
    double ab;
    double an;
    double bn;

    Geometry(Direction const& a, Direction const& b, Direction const& n)
        : ab(a.dot(b)), an(a.dot(n)), bn(b.dot(n))
    {
    }
};

std::string show(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void require_nonnegative_x(double x)
{
    if (!(x >= 0) || !std::isfinite(x))
        throw std::domain_error("boost parameter x must be >= 0, got "
                                + show(x));
}

double sq(double v) { return v * v; }

constexpr double imaginary_tol = 1e-10;

double real_part_checked(Complex value, char const* label)
{
    if (std::abs(value.imag()) > imaginary_tol)
    {
        throw NumericalContractError(
            std::string("imaginary residue in trace for ") + label + ": "
            + show(value.imag()));
    }
    return value.real();
}
}  // namespace

//---------------------------------------------------------------------------//
void CenterOfMassState::validate() const
{
    if (!std::isfinite(c))
        throw std::domain_error("state parameter c must be finite");
    require_nonnegative_x(x);
}

ScalarStateSpec CenterOfMassState::to_spec(double mass) const
{
    validate();
    return ScalarStateSpec::center_of_mass(c, x, n, mass);
}

//---------------------------------------------------------------------------//
ProbabilityTable::ProbabilityTable(Entries const& entries,
                                   TableContext const& context)
    : p_(entries), context_(context)
{
}

ProbabilityTable ProbabilityTable::from_five(FiveValues const& v,
                                             TableContext const& context)
{
    Entries e{{{v.same, v.bob_zero, v.opposite},
               {v.alice_zero, v.both_zero, v.alice_zero},
               {v.opposite, v.bob_zero, v.same}}};
    return ProbabilityTable(e, context).checked();
}

double ProbabilityTable::sum() const
{
    double s = 0;
    for (auto const& row : p_)
        for (double v : row)
            s += v;
    return s;
}

double ProbabilityTable::correlation() const
{
    double s = 0;
    for (Outcome a : all_outcomes)
        for (Outcome b : all_outcomes)
            s += spin_value(a) * spin_value(b) * (*this)(a, b);
    return s;
}

double ProbabilityTable::correlation_two_term() const
{
    return 2 * ((*this)(Outcome::plus, Outcome::plus)
                - (*this)(Outcome::plus, Outcome::minus));
}

double ProbabilityTable::max_deviation(ProbabilityTable const& other) const
{
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d = std::max(d, std::abs(p_[i][j] - other.p_[i][j]));
    return d;
}

ProbabilityTable ProbabilityTable::checked(double neg_tol, double sum_tol) const
{
    ProbabilityTable result = *this;
    for (auto& row : result.p_)
    {
        for (double& v : row)
        {
            if (!std::isfinite(v))
                throw NumericalContractError("non-finite probability");
            if (v < 0)
            {
                if (v < -neg_tol)
                {
                    throw NumericalContractError("negative probability "
                                                 + show(v));
                }
                v = 0;
            }
            if (v > 1 + neg_tol)
            {
                throw NumericalContractError("probability above one: "
                                             + show(v));
            }
        }
    }
    if (std::abs(result.sum() - 1) > sum_tol)
    {
        throw NumericalContractError("probability table not normalized: sum = "
                                     + std::to_string(result.sum()));
    }
    return result;
}

//---------------------------------------------------------------------------//
MNTMatrices mnt(FourVector const& q, Direction const& omega, double mass)
{
    Complex4x3 const e = amplitude(q, mass).e;
    Complex3x3 const ws = omega_dot_s(omega);
    Complex3x3 const ws2 = ws * ws;

    auto sandwich = [&e](Complex3x3 const& x) -> Complex4x4 {
        return e.conjugate() * x * e.transpose();
    };
    return {sandwich(ws2), sandwich(ws), sandwich(Complex3x3::Identity() - ws2)};
}

ProbabilityTable prob_table_trace(ScalarStateSpec const& spec,
                                  Direction const& a, Direction const& b)
{
    double const norm = normalization(spec);
    Complex4x4 const g = g_tensor(spec).cast<Complex>();
    Complex4x4 const gt = g.transpose();

    MNTMatrices const alice = mnt(spec.k(), a, spec.mass());
    MNTMatrices const bob = mnt(spec.p(), b, spec.mass());

    auto tr = [&](Complex4x4 const& x, Complex4x4 const& y) {
        return (x * g * y * gt).trace();
    };
    Complex const mm = tr(alice.m, bob.m);
    Complex const nn = tr(alice.n, bob.n);

    FiveValues v;
    v.same = real_part_checked((mm - nn) / (4 * norm), "P(+,+)");
    v.opposite = real_part_checked((mm + nn) / (4 * norm), "P(+,-)");
    v.alice_zero = real_part_checked(tr(alice.t, bob.m) / (2 * norm), "P(0,+)");
    v.bob_zero = real_part_checked(tr(alice.m, bob.t) / (2 * norm), "P(+,0)");
    v.both_zero = real_part_checked(tr(alice.t, bob.t) / norm, "P(0,0)");
    return ProbabilityTable::from_five(v, {spec.c(), a, b});
}

//---------------------------------------------------------------------------//
ProbabilityTable prob_table_closed(CenterOfMassState const& state,
                                   Direction const& a, Direction const& b)
{
    state.validate();
    double const c = state.c;
    double const x = state.x;
    Geometry const geo(a, b, state.n);

    double const norm = normalization_center_of_mass(c, x);
    double const den = 2 * x + 1;
    // Same as 1 + 2cx/(2x+1) and 1 + 2c(x+1)/(2x+1), exact at c = -1
    double const f_k = (2 * x * (1 + c) + 1) / den;
    double const f_p = (2 * (x + 1) * (1 + c) - 1) / den;
    double const kappa = 4 * x * (x + 1) * f_k * f_p;
    double const bracket = geo.ab + 2 * x * f_p * geo.an * geo.bn;
    double const cross = geo.ab + 2 * x * f_p * (geo.ab - geo.an * geo.bn);
    double const common = 1 + kappa * (1 - sq(geo.an) - sq(geo.bn)) + sq(bracket);

    FiveValues v;
    v.same = (common - 2 * cross) / (4 * norm);
    v.opposite = (common + 2 * cross) / (4 * norm);
    v.alice_zero = (1 + kappa * sq(geo.an) - sq(bracket)) / (2 * norm);
    v.bob_zero = (1 + kappa * sq(geo.bn) - sq(bracket)) / (2 * norm);
    v.both_zero = sq(bracket) / norm;
    return ProbabilityTable::from_five(v, {c, a, b});
}

ProbabilityTable prob_table_closed(double c, double x, Direction const& n,
                                   Direction const& a, Direction const& b)
{
    return prob_table_closed(CenterOfMassState{c, x, n}, a, b);
}

ProbabilityTable prob_table_psi(double x, Direction const& n,
                                Direction const& a, Direction const& b)
{
    require_nonnegative_x(x);
    Geometry const g(a, b, n);
    double const s = 2 * x + 1;
    double const den = sq(s) + 2;
    double const anbn = g.an * g.bn;
    double const sq_sum = sq(g.an) + sq(g.bn);
    double const bracket = sq(g.ab + 2 * x * anbn);

    FiveValues v;
    v.same = (sq(s) - 2 * s * g.ab + 4 * x * anbn - 4 * x * (x + 1) * sq_sum
              + bracket)
             / (4 * den);
    v.opposite = (sq(s) + 2 * s * g.ab - 4 * x * anbn - 4 * x * (x + 1) * sq_sum
                  + bracket)
                 / (4 * den);
    v.alice_zero = (1 + 4 * x * (x + 1) * sq(g.an) - bracket) / (2 * den);
    v.bob_zero = (1 + 4 * x * (x + 1) * sq(g.bn) - bracket) / (2 * den);
    v.both_zero = bracket / den;
    return ProbabilityTable::from_five(v, {psi_c, a, b});
}

ProbabilityTable prob_table_xi(double x, Direction const& n,
                               Direction const& a, Direction const& b)
{
    require_nonnegative_x(x);
    Geometry const g(a, b, n);
    double const s = 2 * x + 1;
    double const den = 2 * sq(s) + 1;
    double const anbn = g.an * g.bn;
    double const bracket = sq(s * g.ab - 2 * x * anbn);
    double const common = bracket + sq(s)
                          - 4 * x * (x + 1) * (1 - sq(g.an) - sq(g.bn));
    double const cross = 2 * s * (g.ab + 2 * x * anbn);

    FiveValues v;
    v.same = (common - cross) / (4 * den);
    v.opposite = (common + cross) / (4 * den);
    v.alice_zero = (1 + 4 * x * (x + 1) * (1 - sq(g.an)) - bracket) / (2 * den);
    v.bob_zero = (1 + 4 * x * (x + 1) * (1 - sq(g.bn)) - bracket) / (2 * den);
    v.both_zero = bracket / den;
    return ProbabilityTable::from_five(v, {xi_c, a, b});
}

//---------------------------------------------------------------------------//
double correlation(CenterOfMassState const& state, Direction const& a,
                   Direction const& b)
{
    state.validate();
    double const x = state.x;
    Geometry const g(a, b, state.n);
    double const f_p = (2 * (x + 1) * (1 + state.c) - 1) / (2 * x + 1);
    double const norm = normalization_center_of_mass(state.c, x);
    return -2 / norm * (g.ab + 2 * x * f_p * (g.ab - g.an * g.bn));
}

double correlation(double c, double x, Direction const& n, Direction const& a,
                   Direction const& b)
{
    return correlation(CenterOfMassState{c, x, n}, a, b);
}

//---------------------------------------------------------------------------//
ProbabilityTable limit_tables(LimitKind kind, Direction const& a,
                              Direction const& b, Direction const& n)
{
    Geometry const g(a, b, n);
    FiveValues v;
    double c = 0;
    switch (kind)
    {
        case LimitKind::nonrelativistic:
            v.same = sq(1 - g.ab) / 12;
            v.opposite = sq(1 + g.ab) / 12;
            v.alice_zero = (1 - sq(g.ab)) / 6;
            v.bob_zero = v.alice_zero;
            v.both_zero = sq(g.ab) / 3;
            break;
        case LimitKind::ultrarelativistic_generic:
            v.same = (1 - sq(g.an)) * (1 - sq(g.bn)) / 4;
            v.opposite = v.same;
            v.alice_zero = sq(g.an) * (1 - sq(g.bn)) / 2;
            v.bob_zero = sq(g.bn) * (1 - sq(g.an)) / 2;
            v.both_zero = sq(g.an) * sq(g.bn);
            break;
        case LimitKind::ultrarelativistic_xi: {
            double const t = sq(g.ab - g.an * g.bn);
            v.same = (t + sq(g.an - g.bn)) / 8;
            v.opposite = (t + sq(g.an + g.bn)) / 8;
            v.alice_zero = (1 - sq(g.an) - t) / 4;
            v.bob_zero = (1 - sq(g.bn) - t) / 4;
            v.both_zero = t / 2;
            c = xi_c;
            break;
        }
    }
    return ProbabilityTable::from_five(v, {c, a, b});
}

LimitKind ultrarelativistic_limit_for(double c)
{
    return c == xi_c ? LimitKind::ultrarelativistic_xi
                     : LimitKind::ultrarelativistic_generic;
}

}  // namespace vbell
