#include "vbell/inequalities.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace vbell
{
namespace
{
InequalityResult make_result(InequalityKind kind, double value,
                             CenterOfMassState const& state,
                             MeasurementSettings const& settings)
{
    InequalityResult r;
    r.kind = kind;
    r.value = value;
    r.classical_bound = classical_bound(kind);
    r.settings = settings;
    r.state = state;
    r.violated = value > r.classical_bound + violation_epsilon;
    return r;
}

//! Outcome labels 0, 1, 2 stand for the spin values -1, 0, +1.
Outcome outcome_of_label(int label) { return static_cast<Outcome>(2 - label); }

//! Joint distribution re-indexed by outcome labels: q[alice][bob].
using LabelTable = std::array<std::array<double, 3>, 3>;

LabelTable by_label(ProbabilityTable const& t)
{
    LabelTable q{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            q[i][j] = t(outcome_of_label(i), outcome_of_label(j));
    return q;
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

/*!
 * P(X = Y + k) = sum_l P(X = l, Y = l + k mod 3).
 *
 * `alice_first` says whether X is the Alice-side measurement of the table.
 */
double prob_differ(LabelTable const& q, bool alice_first, int k)
{
    double s = 0;
    for (int l = 0; l < 3; ++l)
    {
        int const other = mod3(l + k);
        s += alice_first ? q[l][other] : q[other][l];
    }
    return s;
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(InequalityKind kind)
{
    switch (kind)
    {
        case InequalityKind::chsh:
            return "chsh";
        case InequalityKind::mermin:
            return "mermin";
        case InequalityKind::cglmp:
            return "cglmp";
    }
    return "unknown";
}

InequalityKind parse_inequality_kind(std::string_view name)
{
    if (name == "chsh")
        return InequalityKind::chsh;
    if (name == "mermin")
        return InequalityKind::mermin;
    if (name == "cglmp")
        return InequalityKind::cglmp;
    throw std::invalid_argument("unknown inequality '" + std::string(name) + "'");
}

double classical_bound(InequalityKind kind)
{
    return kind == InequalityKind::mermin ? 1.0 : 2.0;
}

int direction_count(InequalityKind kind)
{
    return kind == InequalityKind::mermin ? 3 : 4;
}

void MeasurementSettings::require(InequalityKind kind) const
{
    if (!c)
        throw std::invalid_argument(std::string(to_string(kind))
                                    + " needs direction c");
    if (kind != InequalityKind::mermin && !d)
        throw std::invalid_argument(std::string(to_string(kind))
                                    + " needs direction d");
}

//---------------------------------------------------------------------------//
InequalityResult chsh(CenterOfMassState const& state,
                      MeasurementSettings const& settings)
{
    settings.require(InequalityKind::chsh);
    auto const& [a, b, c, d] = settings;
    double const value = std::abs(correlation(state, a, b) - correlation(state, a, *d))
                         + std::abs(correlation(state, *c, b)
                                    + correlation(state, *c, *d));
    return make_result(InequalityKind::chsh, value, state, settings);
}

InequalityResult mermin(CenterOfMassState const& state,
                        MeasurementSettings const& settings)
{
    settings.require(InequalityKind::mermin);
    auto const& a = settings.a;
    auto const& b = settings.b;
    auto const& c = *settings.c;
    double const value = correlation(state, a, b) + correlation(state, b, c)
                         + correlation(state, c, a);
    return make_result(InequalityKind::mermin, value, state, settings);
}

double cglmp_value(TableProvider const& provider,
                   MeasurementSettings const& settings)
{
    settings.require(InequalityKind::cglmp);
    Direction const& a1 = settings.a;
    Direction const& b1 = settings.b;
    Direction const& a2 = *settings.c;
    Direction const& b2 = *settings.d;

    auto fetch = [&provider](Direction const& alice, Direction const& bob) {
        ProbabilityTable const t = provider(alice, bob);
        if (std::abs(t.sum() - 1) > 1e-8)
            throw std::invalid_argument("CGLMP requires normalized tables");
        return by_label(t);
    };
    LabelTable const t11 = fetch(a1, b1);
    LabelTable const t21 = fetch(a2, b1);
    LabelTable const t22 = fetch(a2, b2);
    LabelTable const t12 = fetch(a1, b2);

    double const positive = prob_differ(t11, true, 0)    // P(A1 = B1)
                            + prob_differ(t21, false, 1)  // P(B1 = A2 + 1)
                            + prob_differ(t22, true, 0)   // P(A2 = B2)
                            + prob_differ(t12, false, 0);  // P(B2 = A1)
    double const negative = prob_differ(t11, true, -1)    // P(A1 = B1 - 1)
                            + prob_differ(t21, false, 0)  // P(B1 = A2)
                            + prob_differ(t22, true, -1)  // P(A2 = B2 - 1)
                            + prob_differ(t12, false, -1);  // P(B2 = A1 - 1)
    return positive - negative;
}

InequalityResult cglmp_generic(CenterOfMassState const& state,
                               MeasurementSettings const& settings)
{
    state.validate();
    TableProvider provider = [&state](Direction const& u, Direction const& v) {
        return prob_table_closed(state, u, v);
    };
    return make_result(InequalityKind::cglmp, cglmp_value(provider, settings),
                       state, settings);
}

InequalityResult cglmp_expanded(CenterOfMassState const& state,
                                MeasurementSettings const& settings)
{
    settings.require(InequalityKind::cglmp);
    using O = Outcome;
    Direction const& a = settings.a;
    Direction const& b = settings.b;
    Direction const& c = *settings.c;
    Direction const& d = *settings.d;

    ProbabilityTable const ab = prob_table_closed(state, a, b);
    ProbabilityTable const cd = prob_table_closed(state, c, d);
    ProbabilityTable const ad = prob_table_closed(state, a, d);
    ProbabilityTable const cb = prob_table_closed(state, c, b);

    double value = correlation(state, a, b) + correlation(state, c, d)
                   + correlation(state, a, d) - correlation(state, c, b);
    value += ab(O::plus, O::minus) + cd(O::plus, O::minus)
             + ad(O::minus, O::plus) - cb(O::plus, O::minus);
    value += ab(O::zero, O::zero) + cd(O::zero, O::zero) + ad(O::zero, O::zero)
             - cb(O::zero, O::zero);
    value -= ab(O::zero, O::minus) + cd(O::zero, O::minus)
             + ad(O::minus, O::zero) - cb(O::zero, O::minus)
             + ab(O::plus, O::zero) + cd(O::plus, O::zero)
             + ad(O::zero, O::plus) - cb(O::plus, O::zero);
    return make_result(InequalityKind::cglmp, value, state, settings);
}

InequalityResult evaluate(InequalityKind kind, CenterOfMassState const& state,
                          MeasurementSettings const& settings)
{
    switch (kind)
    {
        case InequalityKind::chsh:
            return chsh(state, settings);
        case InequalityKind::mermin:
            return mermin(state, settings);
        case InequalityKind::cglmp:
            return cglmp_generic(state, settings);
    }
    throw std::invalid_argument("unknown inequality kind");
}

}  // namespace vbell
