#include "vbell/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vbell
{
NelderMeadResult nelder_mead(Objective const& f, std::span<double const> start,
                             NelderMeadOptions const& options)
{
    std::size_t const dim = start.size();
    if (dim == 0)
        throw std::invalid_argument("nelder_mead: empty start point");

    using Point = std::vector<double>;
    std::vector<Point> simplex(dim + 1, Point(start.begin(), start.end()));
    for (std::size_t i = 0; i < dim; ++i)
        simplex[i + 1][i] += options.initial_step;

    NelderMeadResult result;
    auto eval = [&](Point const& p) {
        ++result.evaluations;
        return f(p);
    };

    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i)
        values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    Point centroid(dim), trial(dim), second(dim);

    auto along = [&](double t, Point& out) {
        // centroid + t (centroid - worst)
        Point const& worst = simplex[order.back()];
        for (std::size_t j = 0; j < dim; ++j)
            out[j] = centroid[j] + t * (centroid[j] - worst[j]);
    };

    for (; result.iterations < options.max_iters; ++result.iterations)
    {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Stable: equal values keep vertex order, so runs are reproducible
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t l, std::size_t r) {
                             return values[l] < values[r];
                         });
        double const best = values[order.front()];
        double const worst = values[order.back()];
        if (worst - best <= options.value_tolerance)
            break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i)
        {
            Point const& p = simplex[order[i]];
            for (std::size_t j = 0; j < dim; ++j)
                centroid[j] += p[j] / static_cast<double>(dim);
        }

        std::size_t const w = order.back();
        double const second_worst = values[order[dim - 1]];

        along(1.0, trial);
        double const reflected = eval(trial);
        if (reflected < best)
        {
            along(2.0, second);
            double const expanded = eval(second);
            if (expanded < reflected)
            {
                simplex[w] = second;
                values[w] = expanded;
            }
            else
            {
                simplex[w] = trial;
                values[w] = reflected;
            }
            continue;
        }
        if (reflected < second_worst)
        {
            simplex[w] = trial;
            values[w] = reflected;
            continue;
        }

        bool const outside = reflected < worst;
        along(outside ? 0.5 : -0.5, second);
        double const contracted = eval(second);
        if (contracted < (outside ? reflected : worst))
        {
            simplex[w] = second;
            values[w] = contracted;
            continue;
        }

        // Shrink toward the best vertex
        Point const& anchor = simplex[order.front()];
        for (std::size_t i = 1; i <= dim; ++i)
        {
            std::size_t const v = order[i];
            for (std::size_t j = 0; j < dim; ++j)
                simplex[v][j] = anchor[j] + 0.5 * (simplex[v][j] - anchor[j]);
            values[v] = eval(simplex[v]);
        }
    }

    auto const best_it = std::min_element(values.begin(), values.end());
    auto const best_idx = static_cast<std::size_t>(best_it - values.begin());
    result.point = simplex[best_idx];
    result.value = *best_it;
    return result;
}

}  // namespace vbell
