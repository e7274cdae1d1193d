#include "phasefield/analysis.hpp"
#include "phasefield/errors.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace phasefield;
using testutil::make_field;

TEST_CASE("phase volume")
{
    const GridSpec g{100, 100, 1.0, 1.0};
    CHECK(phase_volume(Field(g, -1.0), PhaseConvention::SolidMinusOne) == 10000.0);
    CHECK(phase_volume(Field(g, 1.0), PhaseConvention::SolidMinusOne) == 0.0);
    CHECK(phase_volume(Field(g, 1.0), PhaseConvention::SolidOne) == 10000.0);
    CHECK(phase_volume(Field(g, 0.25), PhaseConvention::UnitInterval) == 2500.0);

    const Field half = make_field(g, [](double x, double) { return x < 50.0 ? -1.0 : 1.0; });
    CHECK(std::abs(phase_volume(half, PhaseConvention::SolidMinusOne) - 5000.0) <= 100.0);

    CHECK(phase_volume(Field({10, 1, 0.5, 0.5}, -1.0), PhaseConvention::SolidMinusOne) == 5.0);
    CHECK(phase_volume(Field({4, 4, 0.5, 2.0}, -1.0), PhaseConvention::SolidMinusOne) == 16.0);
}

TEST_CASE("property: phase volume is monotone in phi")
{
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.0, 0.5);
    const GridSpec g{15, 12, 0.4, 0.4};
    for (int trial = 0; trial < 30; ++trial) {
        Field a(g, 0.0);
        for (double& v : a.values())
            v = u(rng);
        Field b = a;
        for (double& v : b.values())
            v += bump(rng);
        REQUIRE(phase_volume(a, PhaseConvention::SolidMinusOne) >=
                phase_volume(b, PhaseConvention::SolidMinusOne));
    }
}

TEST_CASE("interface position")
{
    const GridSpec g{100, 1, 0.1, 0.1};
    const Field f = make_field(g, [](double x, double) { return std::tanh(x - 5.0); });
    CHECK(std::abs(interface_position_1d(f, 0.0) - 5.0) <= 0.01);

    const Profile two{{0.5, 1.5}, {-1.0, 1.0}};
    CHECK(interface_position(two, 0.0) == 1.0);

    const Profile falling{{0.0, 1.0, 2.0}, {1.0, 0.0, -1.0}};
    CHECK(interface_position(falling, 0.5) == 0.5);

    try {
        interface_position_1d(Field(g, 0.3), 0.0);
        FAIL("expected a detection error");
    } catch (const DetectionError& e) {
        CHECK(e.crossings() == 0);
    }
    const Profile bump{{0, 1, 2, 3}, {-1, 1, 1, -1}};
    CHECK_THROWS_AS(interface_position(bump, 0.0), DetectionError);
    CHECK_THROWS_AS(interface_position_1d(Field({4, 4, 1.0, 1.0}, 0.0), 0.0), UsageError);
}

TEST_CASE("property: interface position follows grid shifts exactly")
{
    const GridSpec g{200, 1, 0.25, 0.25};
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> w(0.5, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double width = w(rng);
        const Field f =
            make_field(g, [&](double x, double) { return std::tanh((x - 20.1) / width); });
        const double base = interface_position_1d(f, 0.0);
        for (const int shift : {1, 7, 40}) {
            Field s(g, 1.0);
            for (int i = 1; i <= g.nx; ++i)
                s(i, 1) = i - shift >= 1 ? f(i - shift, 1) : -1.0;
            REQUIRE(interface_position_1d(s, 0.0) ==
                    doctest::Approx(base + shift * g.dx).epsilon(1e-14));
        }
    }
}

TEST_CASE("interface width")
{
    const GridSpec g{50, 1, 1.0, 1.0};
    const Field step = make_field(g, [](double x, double) { return x < 25.0 ? -1.0 : 1.0; });
    CHECK(interface_width(step, -0.8, 0.8) <= g.dx);

    const double delta = 2.0;
    const GridSpec fine{200, 1, delta / 5, delta / 5};
    const Field t = make_field(fine, [&](double x, double) { return std::tanh((x - 40.0) / delta); });
    CHECK(interface_width(t, -0.8, 0.8) ==
          doctest::Approx(2.0 * delta * std::atanh(0.8)).epsilon(0.05));
    CHECK_THROWS_AS(interface_width(t, 0.8, -0.8), UsageError);

    const auto lv = default_width_levels(PhaseConvention::UnitInterval);
    CHECK(lv[0] == 0.1);
    CHECK(lv[1] == 0.9);
    const auto pm = default_width_levels(PhaseConvention::SolidMinusOne);
    CHECK(pm[0] == -0.8);
    CHECK(pm[1] == 0.8);
    CHECK(mid_level(PhaseConvention::UnitInterval) == 0.5);
    CHECK(mid_level(PhaseConvention::SolidOne) == 0.0);
}

TEST_CASE("total enthalpy")
{
    const GridSpec g{10, 10, 1.0, 1.0};
    CHECK(total_enthalpy(Field(g, 0.0), Field(g, 0.0), 2.0) == 0.0);
    CHECK(total_enthalpy(Field(g, 1.0), Field(g, 0.0), 2.0) == 100.0);
    CHECK(total_enthalpy(Field(g, 1.0), Field(g, -1.0), 2.0) == 0.0);
    CHECK_THROWS_AS(total_enthalpy(Field(g, 0.0), Field({10, 1, 1.0, 1.0}, 0.0), 1.0), UsageError);
}

TEST_CASE("square-root growth fit")
{
    std::vector<double> t, s;
    for (int k = 1; k <= 10; ++k) {
        t.push_back(k);
        s.push_back(2.0 * std::sqrt(static_cast<double>(k)));
    }
    const SqrtFit a = fit_sqrt_growth(t, s);
    CHECK(a.beta == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(a.t0) <= 1e-12);
    CHECK(std::abs(a.r_squared - 1.0) <= 1e-12);
    CHECK_FALSE(a.degenerate);

    t.clear();
    s.clear();
    for (int k = 2; k <= 20; ++k) {
        t.push_back(k);
        s.push_back(3.0 * std::sqrt(k - 1.0));
    }
    const SqrtFit b = fit_sqrt_growth(t, s);
    CHECK(b.beta == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b.t0 == doctest::Approx(1.0).epsilon(1e-10));

    const std::vector<double> tt{1, 2, 3, 4}, shrinking{4, 3, 2, 1};
    const SqrtFit d = fit_sqrt_growth(tt, shrinking);
    CHECK(d.degenerate);
    CHECK(std::isnan(d.beta));

    const std::vector<double> two{1, 2};
    CHECK_THROWS_AS(fit_sqrt_growth(two, two), UsageError);
    const std::vector<double> unsorted{1, 3, 2}, pos{1, 1, 1};
    CHECK_THROWS_AS(fit_sqrt_growth(unsorted, pos), UsageError);
    const std::vector<double> three{1, 2, 3}, neg{1, -1, 1};
    CHECK_THROWS_AS(fit_sqrt_growth(three, neg), UsageError);
}

TEST_CASE("property: square-root fit round-trips its own model")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> beta(0.1, 5.0);
    std::uniform_real_distribution<double> origin(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double b = beta(rng);
        const double t0 = origin(rng);
        std::vector<double> t, s;
        for (int k = 0; k < 40; ++k) {
            const double time = t0 + 0.5 + 0.75 * k;
            t.push_back(time);
            s.push_back(b * std::sqrt(time - t0));
        }
        const SqrtFit f = fit_sqrt_growth(t, s);
        REQUIRE(std::abs(f.r_squared - 1.0) <= 1e-12);
        REQUIRE(f.beta == doctest::Approx(b).epsilon(1e-10));
        REQUIRE(std::abs(f.t0 - t0) <= 1e-8);
    }
}

TEST_CASE("tail fit uses the trailing samples")
{
    std::vector<double> t, s;
    for (int k = 1; k <= 20; ++k) {
        t.push_back(k);
        s.push_back(k <= 10 ? 0.0 : 2.0 * std::sqrt(k - 5.0));
    }
    const SqrtFit f = fit_sqrt_growth_tail(t, s, 0.5);
    CHECK(f.beta == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.t0 == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(fit_sqrt_growth(t, s).r_squared < 0.99);
    CHECK_THROWS_AS(fit_sqrt_growth_tail(t, s, 0.0), UsageError);
    CHECK_THROWS_AS(fit_sqrt_growth_tail(t, s, 1.5), UsageError);
}

TEST_CASE("linear fit")
{
    const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
    const LinearFit f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.r_squared == doctest::Approx(1.0));
    const std::vector<double> flat{2, 2, 2, 2};
    CHECK_THROWS_AS(fit_line(flat, y), UsageError);
}

TEST_CASE("neumann coefficient")
{
    const double st = 1e-4;
    const double b = neumann_beta(st);
    CHECK(b * b / (2.0 * st) == doctest::Approx(1.0).epsilon(1e-2));

    for (const double s : {1e-3, 0.1, 0.5, 2.0, 10.0})
        CHECK(std::abs(neumann_relation(neumann_beta(s)) - s) <= 1e-8);

    CHECK_THROWS_AS(neumann_beta(0.0), UsageError);
    CHECK_THROWS_AS(neumann_beta(-1.0), UsageError);
}

TEST_CASE("property: neumann coefficient increases with the Stefan number")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(1e-3, 20.0);
    std::vector<double> st(40);
    for (double& v : st)
        v = u(rng);
    std::sort(st.begin(), st.end());
    double prev = 0.0;
    for (double v : st) {
        const double b = neumann_beta(v);
        REQUIRE(b > prev);
        prev = b;
    }
}

TEST_CASE("ray radii and asymmetry")
{
    const double R = 20.0;
    const GridSpec g{80, 80, R / 20, R / 20};
    const Field disk = make_field(g, [&](double x, double y) {
        return std::tanh((std::hypot(x - 40.0, y - 40.0) - R) / 2.0);
    });
    CHECK(mean_radius(disk, 0.0) == doctest::Approx(R).epsilon(0.01));
    CHECK(radial_asymmetry(disk, 0.0) <= 0.05);
    for (double r : ray_radii(disk, 0.0))
        CHECK(r == doctest::Approx(R).epsilon(0.02));

    const Field square = make_field(g, [&](double x, double y) {
        return std::max(std::abs(x - 40.0), std::abs(y - 40.0)) < R ? -1.0 : 1.0;
    });
    CHECK(radial_asymmetry(square, 0.0) > 0.3);

    const Field off = make_field(g, [&](double x, double y) {
        return std::tanh((std::hypot(x - 30.0, y - 50.0) - 10.0) / 2.0);
    });
    const auto r = ray_radii(off, 0.0, 30.0, 50.0);
    for (double v : r)
        CHECK(v == doctest::Approx(10.0).epsilon(0.02));

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> noise(-0.2, 0.2);
    Field lumpy = disk;
    for (int j = 1; j <= g.ny; ++j)
        for (int i = 1; i <= g.nx; ++i)
            lumpy(i, j) += noise(rng) * (1.0 - lumpy(i, j) * lumpy(i, j));
    CHECK(radial_asymmetry(testutil::rotate90(lumpy), 0.0) ==
          doctest::Approx(radial_asymmetry(lumpy, 0.0)).epsilon(1e-12));

    CHECK_THROWS_AS(ray_radii(Field(g, 1.0), 0.0), DetectionError);
    CHECK_THROWS_AS(ray_radii(Field({10, 1, 1.0, 1.0}, 1.0), 0.0), UsageError);
}
