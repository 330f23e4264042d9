#include "vbell/figures.hpp"

#include <stdexcept>
#include <string>

namespace vbell
{
FigurePreset figure_preset(int id)
{
    using D = Direction;
    switch (id)
    {
        case 1:
            return {1, InequalityKind::mermin,
                    {D(1.593, 3.236), D(1.564, 1.150), D(1.514, 5.322), std::nullopt},
                    D()};
        case 2:
            return {2, InequalityKind::mermin,
                    {D(1.891, 3.820), D(2.589, 0.653), D(0.220, 0.716), std::nullopt},
                    D()};
        case 3:
            return {3, InequalityKind::cglmp,
                    {D(2.667, 4.109), D(0.924, 0.974), D(2.699, 1.005), D(0, 0)},
                    D()};
        case 4:
            return {4, InequalityKind::cglmp,
                    {D(3.141, 0), D(0, 0), D(0.836, 5.044), D(2.754, 1.897)},
                    D()};
        case 5:
            return {5, InequalityKind::cglmp,
                    {D(2.532, 3.141), D(1.213, 0), D(2.378, 1.363), D(0, 0)},
                    D()};
        default:
            throw std::out_of_range("unknown figure id " + std::to_string(id));
    }
}

}  // namespace vbell
