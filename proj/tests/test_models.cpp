#include "phasefield/errors.hpp"
#include "phasefield/models.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace phasefield;
using testutil::make_field;

namespace {

const GridSpec kSquare{16, 16, 1.0, 1.0};
const GridSpec kLine{40, 1, 0.5, 0.5};

CoupledFields constant_pair(const GridSpec& g, double phi, double u)
{
    return {Field(g, phi), Field(g, u)};
}

double caginalp_drift(double dx, int steps)
{
    const int n = static_cast<int>(std::lround(40.0 / dx));
    const GridSpec g{n, 1, dx, dx};
    const Field phi0 = make_field(g, [](double x, double) { return std::tanh((x - 20.0) / 2.0); });
    CoupledFields s{phi0, Field(g, 0.0)};
    const double dt = 0.5 * caginalp_max_dt(g);
    for (int k = 0; k < steps; ++k)
        s = caginalp_step(s, {1.0}, dt, BoundaryCondition::zero_flux());
    return testutil::interior_max_diff(s.phi, phi0);
}

Field random_field(const GridSpec& g, std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    Field f(g, 0.0);
    for (double& v : f.values())
        v = u(rng);
    return f;
}

}  // namespace

TEST_CASE("parameter validation names the key")
{
    auto key_of = [](auto&& p) {
        try {
            p.validate();
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string{};
    };
    CHECK(key_of(CaginalpParams{0.0}) == "params.latent_heat");
    CHECK(key_of(AllenCahnParams{1.0, 0.5}) == "params.beta");
    CHECK(key_of(AllenCahnParams{0.0, 0.1}) == "params.mobility");
    CHECK(key_of(KarmaRappelParams{1.0, 0.0}) == "params.width");
    CHECK(key_of(DissolutionParams{1.0, 1.0, 0.0, 1.0, 0.0}) == "params.eps_grad");
    CHECK(key_of(DissolutionParams{}).empty());
}

TEST_CASE("pure phases are fixed points")
{
    const double dt = 0.1;
    for (const double phase : {1.0, -1.0}) {
        const CoupledFields s = constant_pair(kSquare, phase, 0.0);
        const CoupledFields c = caginalp_step(s, {1.5}, dt, BoundaryCondition::zero_flux());
        CHECK(c.phi == s.phi);
        CHECK(c.u == s.u);

        const CoupledFields line = constant_pair(kLine, phase, 0.0);
        const CoupledFields k = karma_rappel_step(line, {}, dt, BoundaryCondition::periodic());
        CHECK(k.phi == line.phi);
        CHECK(k.u == line.u);

        const CoupledFields d = dissolution_step(s, {}, dt, BoundaryCondition::zero_flux());
        CHECK(d.phi == s.phi);
        CHECK(d.u == s.u);
    }

    const CoupledFields liquid_hot = constant_pair(kLine, 1.0, 0.73);
    const CoupledFields k = karma_rappel_step(liquid_hot, {}, 0.1, BoundaryCondition::zero_flux());
    CHECK(k.phi == liquid_hot.phi);

    const AllenCahnParams ac{1.0, 0.17};
    for (const double phase : {0.0, 1.0, 0.5 - ac.beta}) {
        const Field phi(kSquare, phase);
        CHECK(allen_cahn_step(phi, ac, 0.1, BoundaryCondition::periodic()) == phi);
    }
}

TEST_CASE("steppers refuse a dt above the bound")
{
    const CoupledFields sq = constant_pair(kSquare, 1.0, 0.0);
    const CoupledFields line = constant_pair(kLine, 1.0, 0.0);
    const double over = 1.0 + 1e-9;
    CHECK_THROWS_AS(caginalp_step(sq, {}, caginalp_max_dt(kSquare) * over, {}), StabilityError);
    CHECK_THROWS_AS(allen_cahn_step(sq.phi, {}, allen_cahn_max_dt({}, kSquare) * over, {}),
                    StabilityError);
    CHECK_THROWS_AS(karma_rappel_step(line, {}, karma_rappel_max_dt({}, kLine) * over, {}),
                    StabilityError);
    CHECK_THROWS_AS(dissolution_step(sq, {}, dissolution_max_dt({}, kSquare) * over, {}),
                    StabilityError);
    CHECK_NOTHROW(caginalp_step(sq, {}, caginalp_max_dt(kSquare), {}));
    CHECK_THROWS_AS(caginalp_step(sq, {}, 0.0, {}), UsageError);

    try {
        caginalp_step(sq, {}, 1.0, {});
    } catch (const StabilityError& e) {
        CHECK(e.dt() == 1.0);
        CHECK(e.dt_max() == doctest::Approx(0.225));
    }
}

TEST_CASE("dimension preconditions")
{
    CHECK_THROWS_AS(karma_rappel_step(constant_pair(kSquare, 1.0, 0.0), {}, 0.01, {}), UsageError);
    CHECK_THROWS_AS(dissolution_step(constant_pair(kLine, 1.0, 0.0), {}, 0.01, {}), UsageError);
    CHECK_THROWS_AS(caginalp_step({Field(kSquare, 0.0), Field(kLine, 0.0)}, {}, 0.01, {}),
                    UsageError);
}

TEST_CASE("dt bounds")
{
    CHECK(caginalp_max_dt(kSquare) == doctest::Approx(0.225));
    CHECK(allen_cahn_max_dt({2.0, 0.0}, kSquare) == doctest::Approx(0.1125));
    CHECK(karma_rappel_max_dt({1.0, 2.0, 1.0, 1.0}, {10, 1, 1.0, 1.0}) ==
          doctest::Approx(0.45 / 4));
    CHECK(dissolution_max_dt({0.5}, kSquare) == doctest::Approx(0.225 * 0.5));
    CHECK(dissolution_max_dt({4.0}, kSquare) == doctest::Approx(0.225));
}

TEST_CASE("caginalp conserves enthalpy under zero flux")
{
    std::mt19937_64 rng(5);
    const GridSpec g{24, 20, 0.5, 0.5};
    CoupledFields s{random_field(g, rng, -1.0, 1.0), random_field(g, rng, -0.3, 0.3)};
    const double latent = 1.7;
    auto enthalpy_and_scale = [&](const CoupledFields& f) {
        double sum = 0.0, scale = 0.0;
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i) {
                const double h = f.u(i, j) + 0.5 * latent * f.phi(i, j);
                sum += h;
                scale += std::abs(h);
            }
        return std::pair{sum, scale};
    };
    const auto [h0, scale] = enthalpy_and_scale(s);
    const double dt = 0.5 * caginalp_max_dt(g);
    for (int k = 0; k < 500; ++k)
        s = caginalp_step(s, {latent}, dt, BoundaryCondition::zero_flux());
    CHECK(std::abs(enthalpy_and_scale(s).first - h0) / scale <= 500 * 1e-14);
}

TEST_CASE("caginalp tanh profile drift shrinks at second order")
{
    const double coarse = caginalp_drift(0.2, 1000);
    const double fine = caginalp_drift(0.1, 4000);
    const double finer = caginalp_drift(0.05, 16000);
    MESSAGE("drift " << coarse << " " << fine << " " << finer);
    CHECK(finer <= 1e-4);
    CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.15));
    CHECK(std::log2(fine / finer) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("karma-rappel with no coupling keeps its tanh profile")
{
    auto drift = [](double dx) {
        const int n = static_cast<int>(std::lround(30.0 / dx));
        const GridSpec g{n, 1, dx, dx};
        const Field phi0 = make_field(
            g, [](double x, double) { return std::tanh((x - 15.0) / std::sqrt(2.0)); });
        CoupledFields s{phi0, Field(g, 0.0)};
        const KarmaRappelParams p{1.0, 1.0, 0.0, 1.0};
        const double dt = 0.5 * karma_rappel_max_dt(p, g);
        for (int k = 0; k < 1000; ++k)
            s = karma_rappel_step(s, p, dt, BoundaryCondition::zero_flux());
        return testutil::interior_max_diff(s.phi, phi0);
    };
    const double coarse = drift(0.1);
    const double fine = drift(0.05);
    MESSAGE("karma-rappel drift " << coarse << " " << fine);
    CHECK(fine <= 1e-4);
    CHECK(fine < coarse);
}

TEST_CASE("allen-cahn without bias keeps a symmetric front in place")
{
    const GridSpec g{80, 1, 0.5, 0.5};
    Field phi = make_field(g, [](double x, double) { return 0.5 + 0.5 * std::tanh(x - 20.0); });
    const AllenCahnParams p{1.0, 0.0};
    const double dt = 0.5 * allen_cahn_max_dt(p, g);
    auto crossing = [&](const Field& f) {
        for (int i = 1; i < g.nx; ++i)
            if ((f(i, 1) - 0.5) * (f(i + 1, 1) - 0.5) <= 0.0)
                return f.x(i) + g.dx * (0.5 - f(i, 1)) / (f(i + 1, 1) - f(i, 1));
        return -1.0;
    };
    const double x0 = crossing(phi);
    for (int k = 0; k < 1000; ++k)
        phi = allen_cahn_step(phi, p, dt, BoundaryCondition::zero_flux());
    CHECK(std::abs(crossing(phi) - x0) <= g.dx);
}

TEST_CASE("property: steppers stay finite and bounded on random data")
{
    std::mt19937_64 rng(99);
    const GridSpec sq{20, 20, 1.0, 1.0};
    const GridSpec line{60, 1, 0.5, 0.5};

    CoupledFields c{random_field(sq, rng, -1.0, 1.0), random_field(sq, rng, -0.2, 0.2)};
    Field a = random_field(sq, rng, 0.0, 1.0);
    CoupledFields k{random_field(line, rng, -1.0, 1.0), random_field(line, rng, -0.2, 0.2)};
    // The c-equation divides by |grad phi|, which vanishes wherever phi has an
    // extremum away from the wells, so dissolution gets interface data that
    // keeps clear of the walls.
    const GridSpec box{32, 32, 1.0, 1.0};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CoupledFields d{Field(box, 0.0), random_field(box, rng, -0.05, 0.05)};
    seed_disk(d.phi, {14 + 4 * unit(rng), 14 + 4 * unit(rng), 6 + 2 * unit(rng), -1.0, 1.0,
                      1 + unit(rng)});

    const AllenCahnParams ap{1.0, 0.1};
    const KarmaRappelParams kp{};
    const DissolutionParams dp{1.0, 1.0, 0.5, 1.0};
    for (int n = 0; n < 1000; ++n) {
        c = caginalp_step(c, {1.0}, 0.5 * caginalp_max_dt(sq), BoundaryCondition::zero_flux());
        a = allen_cahn_step(a, ap, 0.5 * allen_cahn_max_dt(ap, sq), BoundaryCondition::periodic());
        k = karma_rappel_step(k, kp, 0.5 * karma_rappel_max_dt(kp, line),
                              BoundaryCondition::zero_flux());
        d = dissolution_step(d, dp, 0.5 * dissolution_max_dt(dp, box),
                             BoundaryCondition::zero_flux());
    }
    CHECK(c.phi.interior_finite());
    CHECK(c.u.interior_finite());
    CHECK(a.interior_finite());
    CHECK(k.phi.interior_finite());
    CHECK(k.u.interior_finite());
    CHECK(d.phi.interior_finite());
    CHECK(d.u.interior_finite());
    CHECK(c.phi.interior_max_abs() <= 1.1);
    CHECK(a.interior_min() >= -0.1);
    CHECK(a.interior_max() <= 1.1);
    CHECK(k.phi.interior_max_abs() <= 1.1);
    CHECK(d.phi.interior_max_abs() <= 1.1);
}

TEST_CASE("property: mirroring the input mirrors every stepper")
{
    std::mt19937_64 rng(17);
    const GridSpec sq{18, 14, 0.7, 0.7};
    const GridSpec line{30, 1, 0.5, 0.5};
    using testutil::mirror_x;

    const CoupledFields s{random_field(sq, rng, -1.0, 1.0), random_field(sq, rng, -0.3, 0.3)};
    const CoupledFields m{mirror_x(s.phi), mirror_x(s.u)};

    const CoupledFields c1 = caginalp_step(s, {1.0}, 0.1, BoundaryCondition::zero_flux());
    const CoupledFields c2 = caginalp_step(m, {1.0}, 0.1, BoundaryCondition::zero_flux());
    CHECK(testutil::interior_equal(c2.phi, mirror_x(c1.phi)));
    CHECK(testutil::interior_equal(c2.u, mirror_x(c1.u)));

    const Field a1 = allen_cahn_step(s.phi, {1.0, 0.1}, 0.1, BoundaryCondition::periodic());
    const Field a2 = allen_cahn_step(m.phi, {1.0, 0.1}, 0.1, BoundaryCondition::periodic());
    CHECK(testutil::interior_equal(a2, mirror_x(a1)));

    const DissolutionParams dp{1.0, 1.0, 0.5, 1.0};
    const CoupledFields d1 = dissolution_step(s, dp, 0.1, BoundaryCondition::zero_flux());
    const CoupledFields d2 = dissolution_step(m, dp, 0.1, BoundaryCondition::zero_flux());
    CHECK(testutil::interior_equal(d2.phi, mirror_x(d1.phi)));
    CHECK(testutil::interior_equal(d2.u, mirror_x(d1.u)));

    const CoupledFields l{random_field(line, rng, -1.0, 1.0), random_field(line, rng, -0.3, 0.3)};
    const CoupledFields lm{mirror_x(l.phi), mirror_x(l.u)};
    const CoupledFields k1 = karma_rappel_step(l, {}, 0.05, BoundaryCondition::zero_flux());
    const CoupledFields k2 = karma_rappel_step(lm, {}, 0.05, BoundaryCondition::zero_flux());
    CHECK(testutil::interior_equal(k2.phi, mirror_x(k1.phi)));
    CHECK(testutil::interior_equal(k2.u, mirror_x(k1.u)));
}

TEST_CASE("dissolution keeps the four-fold symmetry of a centered disk")
{
    const GridSpec g{32, 32, 1.0, 1.0};
    CoupledFields s{Field(g, 0.0), Field(g, -0.1)};
    seed_disk(s.phi, {16.0, 16.0, 8.0, -1.0, 1.0, std::sqrt(2.0)});
    const DissolutionParams p{1.0, 1.0, 0.5, 1.0};
    const double dt = 0.5 * dissolution_max_dt(p, g);
    for (int k = 0; k < 100; ++k)
        s = dissolution_step(s, p, dt, BoundaryCondition::zero_flux());
    CHECK(testutil::interior_equal(testutil::rotate90(s.phi), s.phi));
    CHECK(testutil::interior_equal(testutil::rotate90(s.u), s.u));
}

TEST_CASE("dissolution shrinks a solid disk in undersaturated liquid")
{
    const GridSpec g{48, 48, 1.0, 1.0};
    CoupledFields s{Field(g, 0.0), Field(g, -0.1)};
    seed_disk(s.phi, {24.0, 24.0, 12.0, -1.0, 1.0, std::sqrt(2.0)});
    const DissolutionParams p{1.0, 1.0, 0.5, 1.0};
    const double dt = 0.5 * dissolution_max_dt(p, g);
    double solid = 0.0;
    auto solid_amount = [&] { return -s.phi.interior_sum(); };
    solid = solid_amount();
    for (int k = 0; k < 10; ++k) {
        for (int n = 0; n < 20; ++n)
            s = dissolution_step(s, p, dt, BoundaryCondition::zero_flux());
        const double now = solid_amount();
        REQUIRE(now < solid);
        solid = now;
    }
}

TEST_CASE("moving-frame residual")
{
    const GridSpec g{60, 1, 0.5, 0.5};
    SUBCASE("uniform liquid has zero residual")
    {
        const MovingFrameParams p{{}, 0.7, 0.3};
        const CoupledFields s = constant_pair(g, 1.0, 0.3);
        const FrameResidual r = moving_frame_residual(s, p);
        CHECK(r.phi.interior_max_abs() == 0.0);
        CHECK(r.u.interior_max_abs() == 0.0);
    }
    SUBCASE("static uncoupled tanh front has a second-order residual")
    {
        auto residual = [](double dx) {
            const int n = static_cast<int>(std::lround(30.0 / dx));
            const GridSpec gg{n, 1, dx, dx};
            const MovingFrameParams p{{1.0, 1.0, 0.0, 1.0}, 0.0, 0.0};
            CoupledFields s{make_field(gg,
                                       [](double x, double) {
                                           return std::tanh((x - 15.0) / std::sqrt(2.0));
                                       }),
                            Field(gg, 0.0)};
            apply_frame_boundary(s, p);
            const FrameResidual r = moving_frame_residual(s, p);
            CHECK(r.u.interior_max_abs() == 0.0);
            return r.phi.interior_max_abs();
        };
        const double coarse = residual(0.2);
        const double fine = residual(0.1);
        CHECK(coarse <= 0.1 * 0.2 * 0.2);
        CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.1));
    }
    CHECK_THROWS_AS(moving_frame_residual(constant_pair(kSquare, 1.0, 0.0), {}), UsageError);
}

TEST_CASE("moving-frame relaxation")
{
    const GridSpec g{300, 1, 0.1, 0.1};
    SUBCASE("static uncoupled front converges")
    {
        const MovingFrameParams p{{1.0, 1.0, 0.0, 1.0}, 0.0, 0.0};
        const RelaxResult r = moving_frame_relax(p, g, 1e-6, 200000);
        CHECK(r.converged);
        CHECK(r.residual <= 1e-6);
        const FrameResidual check = moving_frame_residual(r.fields, p);
        CHECK(std::max(check.phi.interior_max_abs(), check.u.interior_max_abs()) == r.residual);
        CHECK(r.fields.u.interior_max_abs() <= 1e-6);
        CHECK(r.fields.phi(1, 1) < -0.99);
        CHECK(r.fields.phi(g.nx, 1) > 0.99);
    }
    SUBCASE("a zero budget reports the initial residual")
    {
        const MovingFrameParams p{{}, 0.5, 1.5};
        const RelaxResult r = moving_frame_relax(p, g, 1e-6, 0);
        CHECK_FALSE(r.converged);
        CHECK(r.iterations == 0);
        CHECK(r.residual > 1e-6);
    }
    CHECK_THROWS_AS(moving_frame_relax({}, g, 0.0, 10), UsageError);
    CHECK_THROWS_AS(moving_frame_relax({}, kSquare, 1e-6, 10), UsageError);
}
