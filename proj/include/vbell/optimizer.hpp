#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "inequalities.hpp"

namespace vbell
{
//---------------------------------------------------------------------------//
struct OptimizerConfig
{
    std::size_t restarts{100};
    std::size_t max_iters{2000};
    //! Simplex convergence: spread of objective values across vertices.
    double simplex_tolerance{1e-10};
    std::uint64_t seed{0};
    //! Initial simplex edge in radians.
    double initial_step{0.5};
    //! Worker threads; 0 means hardware concurrency capped by BELL_THREADS.
    unsigned threads{0};

    //! Throws std::invalid_argument for zero restarts/iterations or bad tolerances.
    void validate() const;
};

//! Threads to use for a request (see OptimizerConfig::threads).
unsigned worker_count(unsigned requested);

//! Settings built from (theta, phi) pairs, folded into range.
MeasurementSettings settings_from_angles(std::span<double const> angles);

//---------------------------------------------------------------------------//
struct SearchResult
{
    MeasurementSettings settings;
    double value{0};
    //! Largest objective value among the restart starting points.
    double best_initial{0};
    std::size_t restarts{0};
    std::size_t evaluations{0};
};

using SettingsObjective = std::function<double(MeasurementSettings const&)>;

/*!
 * Multistart simplex maximization over `directions` measurement directions.
 *
 * Restart i draws its starting angles (uniform on the sphere) from counter
 * stream i of the seed, so results do not depend on thread count. The best
 * restart wins; ties go to the lowest restart index.
 */
SearchResult maximize_settings(int directions, SettingsObjective const& objective,
                               OptimizerConfig const& cfg);

struct OptimizeResult
{
    InequalityResult best;
    double best_initial{0};
    std::size_t restarts{0};
    std::size_t evaluations{0};
};

//! Best settings found for an inequality at fixed (c, x, n).
OptimizeResult optimize(InequalityKind kind, CenterOfMassState const& state,
                        OptimizerConfig const& cfg);

//---------------------------------------------------------------------------//
struct ScanRow
{
    double x{0};
    //! One value per requested c, in request order.
    std::vector<double> values;
    InequalityKind kind{InequalityKind::chsh};
};

//! xmin, xmin + step, ... up to xmax (inclusive within 1e-9 step).
std::vector<double> make_grid(double xmin, double xmax, double step);

/*!
 * Inequality values at fixed settings along an x grid.
 *
 * The grid must be nonempty and strictly increasing.
 */
std::vector<ScanRow> scan(InequalityKind kind, MeasurementSettings const& settings,
                          Direction const& n, std::span<double const> c_states,
                          std::span<double const> x_grid);

}  // namespace vbell
