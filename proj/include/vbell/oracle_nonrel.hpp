#pragma once

#include <array>

#include "linalg.hpp"
#include "probabilities.hpp"

namespace vbell::oracle
{
/*!
 * Pure state of two spin-1 particles in the product basis |l> (x) |s>.
 *
 * Amplitude index is 3 * index_of(l) + index_of(s); the first factor is
 * Alice's particle.
 */
struct QutritPairState
{
    std::array<Complex, 9> amplitudes{};

    Complex& operator()(Outcome alice, Outcome bob)
    {
        return amplitudes[3 * index_of(alice) + index_of(bob)];
    }
    Complex operator()(Outcome alice, Outcome bob) const
    {
        return amplitudes[3 * index_of(alice) + index_of(bob)];
    }

    double norm() const;
};

//! (|1,-1> - |0,0> + |-1,1>) / sqrt(3)
QutritPairState singlet();

/*!
 * <state| P_a^l (x) P_b^s |state> by dense 9-dimensional linear algebra.
 *
 * The projectors come from a numerical eigendecomposition of w.S built
 * from the ladder operators; none of the closed-form machinery is used.
 */
ProbabilityTable joint_probs(QutritPairState const& state, Direction const& a,
                             Direction const& b);

//! <w.S (x) 1 + 1 (x) w.S>
double total_spin_projection(QutritPairState const& state, Direction const& omega);

}  // namespace vbell::oracle
