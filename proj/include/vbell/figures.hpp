#pragma once

#include <array>

#include "inequalities.hpp"

namespace vbell
{
/*!
 * Measurement configurations of the published violation curves.
 *
 * Presets 1-2 are Mermin settings (a, b, c); presets 3-5 are CGLMP
 * settings (a, b, c, d). All use n = +z.
 */
struct FigurePreset
{
    int id;
    InequalityKind kind;
    MeasurementSettings settings;
    Direction n;
};

inline constexpr std::array<int, 5> figure_ids{1, 2, 3, 4, 5};

//! Throws std::out_of_range for an unknown id.
FigurePreset figure_preset(int id);

}  // namespace vbell
