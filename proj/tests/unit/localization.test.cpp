#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "vbell/constants.hpp"
#include "vbell/localization.hpp"

using namespace vbell;
using std::numbers::pi;

TEST_CASE("constants")
{
    CHECK(constants::reduced_compton_wavelength(constants::muon_mass)
          == doctest::Approx(1.867594e-15).epsilon(1e-6));
    CHECK(constants::reduced_compton_wavelength(constants::electron_mass)
          == doctest::Approx(3.861593e-13).epsilon(1e-6));
}

TEST_CASE("scaling factor")
{
    LocalizationParams const muon{1e-6, 1.87e-15, 1};
    LocalizationParams const electron{1e-6, 3.86e-13, 1};
    CHECK(scaling_factor(muon) == doctest::Approx(2.674e8).epsilon(1e-3));
    CHECK(scaling_factor(electron) == doctest::Approx(1.295e6).epsilon(1e-3));

    LocalizationParams boosted = muon;
    boosted.gamma = 2;
    CHECK(scaling_factor(boosted) == doctest::Approx(2 * scaling_factor(muon)).epsilon(1e-15));

    CHECK_THROWS_AS(scaling_factor({0, 1e-15, 1}), std::domain_error);
    CHECK_THROWS_AS(scaling_factor({1e-6, -1, 1}), std::domain_error);
    CHECK_THROWS_AS(scaling_factor({1e-6, 1e-15, 0.5}), std::domain_error);
}

TEST_CASE("sinc")
{
    CHECK(sinc(0) == 1);
    CHECK(sinc(1e-9) == doctest::Approx(1).epsilon(1e-15));
    CHECK(sinc(pi) == doctest::Approx(0).epsilon(1e-15));
    CHECK(sinc(2.5) == doctest::Approx(std::sin(2.5) / 2.5).epsilon(1e-15));
    CHECK(sinc(-2.5) == sinc(2.5));
    // Taylor and direct branches meet
    CHECK(sinc(0.99e-4) == doctest::Approx(std::sin(0.99e-4) / 0.99e-4).epsilon(1e-15));
}

TEST_CASE("cube kernel")
{
    LocalizationParams const p{1e-6, 1.87e-15, 1};
    double const tau = scaling_factor(p);

    SUBCASE("peak value and prefactor")
    {
        CubeKernel const k = delta_cube(Vec3::Zero(), p);
        CHECK(k.shape == doctest::Approx(std::pow(tau / pi, 3)).epsilon(1e-15));
        CHECK(k.prefactor
              == doctest::Approx(std::pow(p.compton_reduced / constants::hbar, 3)).epsilon(1e-15));
    }
    SUBCASE("zero at the first node")
    {
        CHECK(std::abs(delta_cube_axis(pi / tau, p)) < 1e-6 * tau / pi);
        CHECK(std::abs(delta_cube(Vec3(pi / tau, 0, 0), p).shape)
              < 1e-6 * std::pow(tau / pi, 3));
    }
    SUBCASE("even in each component")
    {
        Vec3 const dp(0.3 / tau, -1.7 / tau, 2.2 / tau);
        double const s = delta_cube(dp, p).shape;
        for (int j = 0; j < 3; ++j)
        {
            Vec3 flip = dp;
            flip[j] = -flip[j];
            CHECK(delta_cube(flip, p).shape == s);
        }
    }
    SUBCASE("concentrates as the detector grows")
    {
        Vec3 const dp(1e-9, 2e-9, 0);
        double prev = 1;
        for (double l : {1e-6, 1e-4, 1e-2})
        {
            LocalizationParams const q{l, p.compton_reduced, 1};
            double const ratio = std::abs(delta_cube(dp, q).shape / delta_cube(Vec3::Zero(), q).shape);
            CHECK(ratio < prev);
            prev = ratio;
        }
        CHECK(prev < 1e-3);
    }
}

TEST_CASE("one-axis integral is one")
{
    using boost::math::quadrature::gauss_kronrod;
    for (double lambda : {1.87e-15, 3.86e-13})
    {
        LocalizationParams const p{1e-6, lambda, 1};
        double const tau = scaling_factor(p);
        auto f = [&](double u) { return delta_cube_axis(u, p); };
        // Integrate lobe by lobe out to |tau u| = 2000 pi
        double total = 0;
        int const lobes = 2000;
        for (int j = -lobes; j < lobes; ++j)
            total += gauss_kronrod<double, 31>::integrate(f, j * pi / tau, (j + 1) * pi / tau, 0, 1e-12);
        CHECK(total == doctest::Approx(1).epsilon(1e-3));
    }
}
