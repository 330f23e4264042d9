#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "linalg.hpp"
#include "probabilities.hpp"

namespace vbell
{
//---------------------------------------------------------------------------//
enum class InequalityKind
{
    chsh,
    mermin,
    cglmp
};

std::string_view to_string(InequalityKind kind);

//! Parse "chsh", "mermin" or "cglmp" (case-sensitive).
InequalityKind parse_inequality_kind(std::string_view name);

//! Local-realistic bound: 2 for CHSH and CGLMP, 1 for Mermin.
double classical_bound(InequalityKind kind);

//! Number of measurement directions: 4 for CHSH and CGLMP, 3 for Mermin.
int direction_count(InequalityKind kind);

//! Values above bound + this are reported as violations.
inline constexpr double violation_epsilon = 1e-12;

//---------------------------------------------------------------------------//
/*!
 * Measurement directions.
 *
 * For CHSH and CGLMP Alice measures along a or c and Bob along b or d.
 * Mermin uses a, b and c.
 */
struct MeasurementSettings
{
    Direction a;
    Direction b;
    std::optional<Direction> c;
    std::optional<Direction> d;

    //! Throws std::invalid_argument when a direction required by kind is absent.
    void require(InequalityKind kind) const;
};

struct InequalityResult
{
    InequalityKind kind{InequalityKind::chsh};
    double value{0};
    double classical_bound{0};
    MeasurementSettings settings;
    CenterOfMassState state;
    bool violated{false};
};

//---------------------------------------------------------------------------//
// |C(a,b) - C(a,d)| + |C(c,b) + C(c,d)| <= 2
InequalityResult chsh(CenterOfMassState const& state,
                      MeasurementSettings const& settings);

// C(a,b) + C(b,c) + C(c,a) <= 1, first argument of each term on Alice's side
InequalityResult mermin(CenterOfMassState const& state,
                        MeasurementSettings const& settings);

//! Joint table for (Alice direction, Bob direction).
using TableProvider
    = std::function<ProbabilityTable(Direction const&, Direction const&)>;

/*!
 * I_3 built from the modular outcome differences of the four joint tables.
 *
 * Measurements A1, B1, A2, B2 are along a, b, c, d; spin values -1, 0, +1
 * are the outcomes 0, 1, 2. The provider's tables must be normalized.
 */
double cglmp_value(TableProvider const& provider,
                   MeasurementSettings const& settings);

InequalityResult cglmp_generic(CenterOfMassState const& state,
                               MeasurementSettings const& settings);

//! I_3 from its expansion in correlations and individual table entries.
InequalityResult cglmp_expanded(CenterOfMassState const& state,
                                MeasurementSettings const& settings);

//! Dispatch on kind; CGLMP uses the modular construction.
InequalityResult evaluate(InequalityKind kind, CenterOfMassState const& state,
                          MeasurementSettings const& settings);

}  // namespace vbell
