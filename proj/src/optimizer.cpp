#include "vbell/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "vbell/nelder_mead.hpp"
#include "vbell/rng.hpp"

namespace vbell
{
namespace
{
struct RestartOutcome
{
    std::vector<double> angles;
    double value{0};
    double initial{0};
    std::size_t evaluations{0};
};

template<class F>
void parallel_for(std::size_t count, unsigned threads, F&& body)
{
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
        {
            pool.emplace_back([&, t] {
                try
                {
                    for (std::size_t i = t; i < count; i += threads)
                        body(i);
                }
                catch (...)
                {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto const& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
}
}  // namespace

//---------------------------------------------------------------------------//
void OptimizerConfig::validate() const
{
    if (restarts == 0)
        throw std::invalid_argument("optimizer needs at least one restart");
    if (max_iters == 0)
        throw std::invalid_argument("optimizer needs max_iters > 0");
    if (!(simplex_tolerance > 0))
        throw std::invalid_argument("simplex tolerance must be positive");
    if (!(initial_step > 0))
        throw std::invalid_argument("initial simplex step must be positive");
}

unsigned worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("BELL_THREADS"))
    {
        char* end = nullptr;
        long const cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

MeasurementSettings settings_from_angles(std::span<double const> angles)
{
    if (angles.size() < 4 || angles.size() > 8 || angles.size() % 2 != 0)
        throw std::invalid_argument("expected 2 to 4 (theta, phi) pairs");
    auto dir = [&](std::size_t i) {
        return Direction::wrapped(angles[2 * i], angles[2 * i + 1]);
    };
    MeasurementSettings s{dir(0), dir(1), std::nullopt, std::nullopt};
    if (angles.size() >= 6)
        s.c = dir(2);
    if (angles.size() == 8)
        s.d = dir(3);
    return s;
}

//---------------------------------------------------------------------------//
SearchResult maximize_settings(int directions, SettingsObjective const& objective,
                               OptimizerConfig const& cfg)
{
    cfg.validate();
    if (directions < 2 || directions > 4)
        throw std::invalid_argument("optimizer supports 2 to 4 directions");
    auto const dim = static_cast<std::size_t>(2 * directions);

    Objective const negated = [&objective](std::span<double const> angles) {
        return -objective(settings_from_angles(angles));
    };
    NelderMeadOptions const nm{cfg.max_iters, cfg.simplex_tolerance,
                               cfg.initial_step};

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    parallel_for(cfg.restarts, worker_count(cfg.threads), [&](std::size_t i) {
        CounterRng rng(cfg.seed, i);
        std::vector<double> start(dim);
        for (std::size_t d = 0; d < dim; d += 2)
        {
            start[d] = std::acos(1 - 2 * rng.uniform());
            start[d + 1] = 2 * std::numbers::pi * rng.uniform();
        }
        RestartOutcome& out = outcomes[i];
        out.initial = -negated(start);
        NelderMeadResult const r = nelder_mead(negated, start, nm);
        out.angles = r.point;
        out.value = -r.value;
        out.evaluations = r.evaluations + 1;
    });

    SearchResult result;
    std::size_t best = 0;
    result.best_initial = outcomes.front().initial;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
    {
        if (outcomes[i].value > outcomes[best].value)
            best = i;
        result.best_initial = std::max(result.best_initial, outcomes[i].initial);
        result.evaluations += outcomes[i].evaluations;
    }
    result.settings = settings_from_angles(outcomes[best].angles);
    result.value = outcomes[best].value;
    result.restarts = cfg.restarts;
    return result;
}

OptimizeResult optimize(InequalityKind kind, CenterOfMassState const& state,
                        OptimizerConfig const& cfg)
{
    state.validate();
    SettingsObjective const objective = [&](MeasurementSettings const& s) {
        return evaluate(kind, state, s).value;
    };
    SearchResult const found
        = maximize_settings(direction_count(kind), objective, cfg);

    OptimizeResult result;
    // Re-evaluate from the folded angles so value and settings agree exactly
    result.best = evaluate(kind, state, found.settings);
    result.best_initial = found.best_initial;
    result.restarts = found.restarts;
    result.evaluations = found.evaluations;
    if (result.best.value < result.best_initial - 1e-12)
    {
        throw NumericalContractError(
            "optimizer result below a restart starting value");
    }
    return result;
}

//---------------------------------------------------------------------------//
std::vector<double> make_grid(double xmin, double xmax, double step)
{
    if (!(step > 0) || !std::isfinite(step))
        throw std::invalid_argument("grid step must be positive");
    if (!(xmin >= 0) || !(xmax >= xmin) || !std::isfinite(xmax))
        throw std::invalid_argument("grid needs 0 <= xmin <= xmax");
    auto const count
        = static_cast<std::size_t>(std::floor((xmax - xmin) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = xmin + static_cast<double>(i) * step;
    return grid;
}

std::vector<ScanRow> scan(InequalityKind kind, MeasurementSettings const& settings,
                          Direction const& n, std::span<double const> c_states,
                          std::span<double const> x_grid)
{
    if (x_grid.empty())
        throw std::invalid_argument("scan grid is empty");
    if (c_states.empty())
        throw std::invalid_argument("scan needs at least one state");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
    {
        if (!(x_grid[i] > x_grid[i - 1]))
            throw std::invalid_argument("scan grid must be strictly increasing");
    }
    settings.require(kind);

    std::vector<ScanRow> rows(x_grid.size());
    parallel_for(x_grid.size(), worker_count(0), [&](std::size_t i) {
        ScanRow& row = rows[i];
        row.x = x_grid[i];
        row.kind = kind;
        row.values.reserve(c_states.size());
        for (double c : c_states)
            row.values.push_back(evaluate(kind, {c, x_grid[i], n}, settings).value);
    });
    return rows;
}

}  // namespace vbell
