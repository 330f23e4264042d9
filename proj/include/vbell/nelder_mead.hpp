#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace vbell
{
struct NelderMeadOptions
{
    std::size_t max_iters{2000};
    //! Stop when max - min of the simplex values falls below this.
    double value_tolerance{1e-10};
    //! Edge length of the initial axis-aligned simplex.
    double initial_step{0.5};
};

struct NelderMeadResult
{
    std::vector<double> point;
    double value{0};
    std::size_t iterations{0};
    std::size_t evaluations{0};
};

using Objective = std::function<double(std::span<double const>)>;

/*!
 * Minimize f with the Nelder-Mead downhill simplex.
 *
 * Standard coefficients (reflection 1, expansion 2, contraction 1/2,
 * shrink 1/2). The best vertex never gets worse, so the returned value is
 * at most f(start).
 */
NelderMeadResult nelder_mead(Objective const& f, std::span<double const> start,
                             NelderMeadOptions const& options);

}  // namespace vbell
