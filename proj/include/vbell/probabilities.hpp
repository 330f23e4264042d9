#pragma once

#include <array>
#include <stdexcept>

#include "kinematics.hpp"
#include "linalg.hpp"
#include "states.hpp"

namespace vbell
{
//---------------------------------------------------------------------------//
//! Raised when a computed quantity violates a numerical contract.
class NumericalContractError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
/*!
 * A pair in its center-of-mass frame.
 *
 * The particle moves along n with |k|^2 = x m^2; the antiparticle moves
 * along -n. All center-of-mass probabilities depend on m only through x.
 */
struct CenterOfMassState
{
    double c{0};
    double x{0};
    Direction n{};

    static CenterOfMassState psi(double x, Direction const& n = {})
    {
        return {psi_c, x, n};
    }
    static CenterOfMassState xi(double x, Direction const& n = {})
    {
        return {xi_c, x, n};
    }

    //! Throws std::domain_error unless x >= 0 and c is finite.
    void validate() const;

    ScalarStateSpec to_spec(double mass = 1.0) const;
};

//---------------------------------------------------------------------------//
/*!
 * The five distinct joint probabilities of a scalar state.
 *
 * Every entry is the probability of one specific outcome pair; for example
 * `same` is P(+1, +1) = P(-1, -1) and `alice_zero` is P(0, +1) = P(0, -1).
 */
struct FiveValues
{
    double same{0};        //!< P(+,+) = P(-,-)
    double opposite{0};    //!< P(+,-) = P(-,+)
    double alice_zero{0};  //!< P(0,+) = P(0,-)
    double bob_zero{0};    //!< P(+,0) = P(-,0)
    double both_zero{0};   //!< P(0,0)
};

//! Which state and directions a table was evaluated for.
struct TableContext
{
    double c{0};
    Direction alice{};
    Direction bob{};
};

/*!
 * Joint outcome probabilities, p(alice, bob).
 *
 * The first index is Alice (the particle, momentum k, direction a) and the
 * second is Bob (the antiparticle, momentum p, direction b). Both indices
 * run over the outcomes in the order (+1, 0, -1).
 */
class ProbabilityTable
{
  public:
    using Entries = std::array<std::array<double, 3>, 3>;

    ProbabilityTable() = default;
    ProbabilityTable(Entries const& entries, TableContext const& context);

    //! Assemble the 3x3 table from the five distinct values and validate it.
    static ProbabilityTable from_five(FiveValues const& v,
                                      TableContext const& context);

    double operator()(Outcome alice, Outcome bob) const
    {
        return p_[index_of(alice)][index_of(bob)];
    }
    Entries const& entries() const { return p_; }
    TableContext const& context() const { return context_; }

    double sum() const;

    //! sum over outcomes of (alice value)(bob value) p
    double correlation() const;

    //! 2 (p(+,+) - p(+,-)), valid for tables with the five-value symmetry
    double correlation_two_term() const;

    //! Largest |p - q| over the nine entries.
    double max_deviation(ProbabilityTable const& other) const;

    /*!
     * Clamp negatives no larger than neg_tol in magnitude to zero.
     *
     * Throws NumericalContractError for larger negatives, values above one,
     * non-finite entries, or a sum off by more than sum_tol.
     */
    ProbabilityTable checked(double neg_tol = 1e-12,
                             double sum_tol = 1e-8) const;

  private:
    Entries p_{};
    TableContext context_{};
};

//---------------------------------------------------------------------------//
//! Contractions of the amplitudes with (w.S)^2, w.S and 1 - (w.S)^2.
struct MNTMatrices
{
    Complex4x4 m;
    Complex4x4 n;
    Complex4x4 t;
};

MNTMatrices mnt(FourVector const& q, Direction const& omega, double mass);

//---------------------------------------------------------------------------//
// Probability engines
//---------------------------------------------------------------------------//

//! Trace formulas, valid for arbitrary on-shell k and p.
ProbabilityTable prob_table_trace(ScalarStateSpec const& spec,
                                  Direction const& a, Direction const& b);

//! Closed-form center-of-mass probabilities for general c.
ProbabilityTable prob_table_closed(CenterOfMassState const& state,
                                   Direction const& a, Direction const& b);

ProbabilityTable prob_table_closed(double c, double x, Direction const& n,
                                   Direction const& a, Direction const& b);

//! Printed psi-state (c = 0) expressions.
ProbabilityTable prob_table_psi(double x, Direction const& n,
                                Direction const& a, Direction const& b);

//! Printed xi-state (c = -1) expressions.
ProbabilityTable prob_table_xi(double x, Direction const& n,
                               Direction const& a, Direction const& b);

//! Closed-form center-of-mass correlation function.
double correlation(CenterOfMassState const& state, Direction const& a,
                   Direction const& b);

double correlation(double c, double x, Direction const& n, Direction const& a,
                   Direction const& b);

//---------------------------------------------------------------------------//
enum class LimitKind
{
    nonrelativistic,
    ultrarelativistic_generic,  //!< x -> infinity with c != -1
    ultrarelativistic_xi        //!< x -> infinity with c == -1
};

ProbabilityTable limit_tables(LimitKind kind, Direction const& a,
                              Direction const& b, Direction const& n);

//! Limit branch that prob_table_closed(c, x -> infinity) converges to.
LimitKind ultrarelativistic_limit_for(double c);

}  // namespace vbell
