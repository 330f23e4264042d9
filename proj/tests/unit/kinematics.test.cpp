#include <cmath>

#include <doctest.h>

#include "generators.hpp"
#include "vbell/kinematics.hpp"

using namespace vbell;

TEST_CASE("four-vector products")
{
    FourVector const e0{1, 0, 0, 0};
    FourVector const e1{0, 1, 0, 0};
    CHECK(minkowski_dot(e0, e1) == 0);
    CHECK(minkowski_dot(e0, e0) == 1);
    CHECK(minkowski_dot(e1, e1) == -1);

    FourVector const v{2, 3, 5, 7};
    CHECK(v.lower().dot(v.upper()) == minkowski_dot(v, v));
}

TEST_CASE("momentum from x")
{
    test::Gen gen(17);

    SUBCASE("on shell and |k|^2 = x m^2")
    {
        for (int i = 0; i < 200; ++i)
        {
            double const m = gen.uniform(0.1, 10);
            double const x = gen.uniform(0, 50);
            FourVector const k = momentum_from_x({x, gen.direction(), m});
            CHECK(std::abs(minkowski_dot(k, k) - m * m) <= 1e-10 * m * m);
            CHECK(k.spatial().squaredNorm() == doctest::Approx(x * m * m).epsilon(1e-12));
            CHECK(is_on_shell(k, m));
        }
    }
    SUBCASE("(k k^pi) = m^2 (2x+1)")
    {
        for (int i = 0; i < 200; ++i)
        {
            double const m = gen.uniform(0.1, 10);
            double const x = gen.uniform(0, 100);
            FourVector const k = momentum_from_x({x, gen.direction(), m});
            FourVector const kp = parity_partner(k);
            CHECK(std::abs(minkowski_dot(k, kp) - m * m * (2 * x + 1)) <= 1e-10 * m * m * (2 * x + 1));
        }
    }
    SUBCASE("n-independent at rest")
    {
        FourVector const a = momentum_from_x({0, gen.direction(), 2});
        FourVector const b = momentum_from_x({0, gen.direction(), 2});
        CHECK(a.t == b.t);
        CHECK(a.spatial() == b.spatial());
        CHECK(a.t == 2);
    }
    SUBCASE("bad input")
    {
        CHECK_THROWS_AS(momentum_from_x({-1, {}, 1}), std::domain_error);
        CHECK_THROWS_AS(momentum_from_x({1, {}, 0}), std::domain_error);
        CHECK_THROWS_AS(momentum_from_x({1, {}, -2}), std::domain_error);
    }
}

TEST_CASE("on-shell check")
{
    FourVector const k = FourVector::on_shell(1.5, Vec3(0.3, -0.2, 1.0));
    CHECK(is_on_shell(k, 1.5));
    CHECK_FALSE(is_on_shell(k, 1.6));
    FourVector neg = k;
    neg.t = -neg.t;
    CHECK_FALSE(is_on_shell(neg, 1.5));
    FourVector const pp = parity_partner(k);
    CHECK(pp.t == k.t);
    CHECK(pp.spatial() == -k.spatial());
}
