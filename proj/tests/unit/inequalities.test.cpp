#include <cmath>
#include <numbers>

#include <doctest.h>

#include "generators.hpp"
#include "vbell/figures.hpp"
#include "vbell/inequalities.hpp"
#include "vbell/oracle_nonrel.hpp"

using namespace vbell;
using std::numbers::pi;

namespace
{
MeasurementSettings random_settings(test::Gen& gen)
{
    return {gen.direction(), gen.direction(), gen.direction(), gen.direction()};
}

Direction flipped(Direction const& d) { return Direction::from_vector(-d.unit()); }
}  // namespace

TEST_CASE("kind metadata")
{
    CHECK(parse_inequality_kind("chsh") == InequalityKind::chsh);
    CHECK(parse_inequality_kind("mermin") == InequalityKind::mermin);
    CHECK(parse_inequality_kind("cglmp") == InequalityKind::cglmp);
    CHECK_THROWS_AS(parse_inequality_kind("CHSH"), std::invalid_argument);
    CHECK(classical_bound(InequalityKind::chsh) == 2);
    CHECK(classical_bound(InequalityKind::mermin) == 1);
    CHECK(classical_bound(InequalityKind::cglmp) == 2);
    CHECK(direction_count(InequalityKind::mermin) == 3);
    CHECK(to_string(InequalityKind::cglmp) == "cglmp");
}

TEST_CASE("missing directions are rejected")
{
    CenterOfMassState const s{0, 0, {}};
    MeasurementSettings two{{}, {}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(chsh(s, two), std::invalid_argument);
    CHECK_THROWS_AS(mermin(s, two), std::invalid_argument);
    MeasurementSettings three{{}, {}, Direction{}, std::nullopt};
    CHECK_NOTHROW(mermin(s, three));
    CHECK_THROWS_AS(cglmp_generic(s, three), std::invalid_argument);
}

TEST_CASE("CHSH")
{
    CenterOfMassState const rest{psi_c, 0, {}};

    SUBCASE("parallel settings at rest: 2|C| = 4/3")
    {
        MeasurementSettings const s{{}, {}, Direction{}, Direction{}};
        auto const r = chsh(rest, s);
        CHECK(r.value == doctest::Approx(4.0 / 3).epsilon(1e-14));
        CHECK_FALSE(r.violated);
        CHECK(r.classical_bound == 2);
    }
    SUBCASE("coplanar settings at rest: 4 sqrt2 / 3")
    {
        // Polar angles 0, 45, 90, 135 degrees in the x-z plane
        MeasurementSettings const s{Direction(0, 0), Direction(pi / 4, 0),
                                    Direction(pi / 2, 0), Direction(3 * pi / 4, 0)};
        CHECK(std::abs(chsh(rest, s).value - 4 * std::sqrt(2.0) / 3) < 1e-12);
    }
    SUBCASE("invariant under a global sign flip")
    {
        test::Gen gen(79);
        for (int i = 0; i < 200; ++i)
        {
            CenterOfMassState const st{gen.uniform(-2, 2), gen.uniform(0, 5), gen.direction()};
            MeasurementSettings const s = random_settings(gen);
            MeasurementSettings const f{flipped(s.a), flipped(s.b), flipped(*s.c),
                                        flipped(*s.d)};
            CHECK(std::abs(chsh(st, s).value - chsh(st, f).value) < 1e-12);
        }
    }
}

TEST_CASE("Mermin")
{
    SUBCASE("120 degree coplanar settings at rest give exactly 1")
    {
        MeasurementSettings const s{Direction(pi / 2, 0), Direction(pi / 2, 2 * pi / 3),
                                    Direction(pi / 2, 4 * pi / 3), std::nullopt};
        auto const r = mermin({0.5, 0, {}}, s);
        CHECK(std::abs(r.value - 1) < 1e-12);
        CHECK_FALSE(r.violated);
    }
    SUBCASE("no violation at rest")
    {
        test::Gen gen(83);
        for (int i = 0; i < 5000; ++i)
        {
            MeasurementSettings const s{gen.direction(), gen.direction(), gen.direction(),
                                        std::nullopt};
            CHECK(mermin({gen.uniform(-2, 2), 0, {}}, s).value <= 1 + 1e-9);
        }
    }
    SUBCASE("psi correlations vanish at large x")
    {
        test::Gen gen(89);
        for (int i = 0; i < 50; ++i)
        {
            MeasurementSettings const s{gen.direction(), gen.direction(), gen.direction(),
                                        std::nullopt};
            CHECK(std::abs(mermin({psi_c, 1e6, gen.direction()}, s).value) < 1e-3);
        }
    }
}

TEST_CASE("CGLMP")
{
    test::Gen gen(97);

    SUBCASE("modular construction equals the expansion")
    {
        for (int i = 0; i < 500; ++i)
        {
            CenterOfMassState const st{gen.uniform(-2, 2), gen.uniform(0, 10), gen.direction()};
            MeasurementSettings const s = random_settings(gen);
            double const g = cglmp_generic(st, s).value;
            CHECK(std::abs(g - cglmp_expanded(st, s).value) < 1e-12);
            CHECK(g <= 4);
        }
    }
    SUBCASE("equal directions at rest do not violate")
    {
        for (int i = 0; i < 50; ++i)
        {
            Direction const d = gen.direction();
            CHECK(cglmp_generic({0, 0, {}}, {d, d, d, d}).value <= 2);
        }
    }
    SUBCASE("oracle tables give the same value at rest")
    {
        TableProvider const oracle = [](Direction const& a, Direction const& b) {
            return oracle::joint_probs(oracle::singlet(), a, b);
        };
        for (int i = 0; i < 100; ++i)
        {
            MeasurementSettings const s = random_settings(gen);
            CHECK(std::abs(cglmp_value(oracle, s)
                           - cglmp_generic({gen.uniform(-2, 2), 0, {}}, s).value)
                  < 1e-12);
        }
    }
    SUBCASE("unnormalized tables are rejected")
    {
        TableProvider const bad = [](Direction const& a, Direction const& b) {
            ProbabilityTable::Entries e{};
            e[0][0] = 0.5;
            return ProbabilityTable(e, {0, a, b});
        };
        CHECK_THROWS_AS(cglmp_value(bad, random_settings(gen)), std::invalid_argument);
    }
}

TEST_CASE("figure presets")
{
    for (int id : figure_ids)
    {
        FigurePreset const p = figure_preset(id);
        CHECK(p.id == id);
        CHECK_NOTHROW(p.settings.require(p.kind));
        CHECK(p.n.unit().z() == 1);
        CHECK(p.kind == (id <= 2 ? InequalityKind::mermin : InequalityKind::cglmp));
    }
    FigurePreset const f1 = figure_preset(1);
    CHECK(f1.settings.a.theta() == 1.593);
    CHECK(f1.settings.c->phi() == 5.322);
    FigurePreset const f5 = figure_preset(5);
    CHECK(f5.settings.a.phi() == 3.141);
    CHECK_THROWS_AS(figure_preset(0), std::out_of_range);
    CHECK_THROWS_AS(figure_preset(6), std::out_of_range);
}

TEST_CASE("values are continuous in x")
{
    test::Gen gen(101);
    for (InequalityKind kind :
         {InequalityKind::chsh, InequalityKind::mermin, InequalityKind::cglmp})
    {
        MeasurementSettings s = random_settings(gen);
        if (kind == InequalityKind::mermin)
            s.d.reset();
        for (double x = 0; x <= 5; x += 0.25)
        {
            double const c = gen.uniform(-2, 2);
            CenterOfMassState const st{c, x, {}};
            CenterOfMassState const nudged{c, x + 1e-6, {}};
            CHECK(std::abs(evaluate(kind, st, s).value - evaluate(kind, nudged, s).value)
                  < 1e-4);
        }
    }
}
