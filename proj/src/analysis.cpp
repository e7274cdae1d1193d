#include "phasefield/analysis.hpp"

#include "phasefield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phasefield {

double phase_volume(const Field& phi, PhaseConvention convention)
{
    double sum = 0.0;
    for (int j = 1; j <= phi.ny(); ++j) {
        for (int i = 1; i <= phi.nx(); ++i) {
            const double v = phi(i, j);
            switch (convention) {
            case PhaseConvention::SolidMinusOne:
                sum += 0.5 * (1.0 - v);
                break;
            case PhaseConvention::SolidOne:
                sum += 0.5 * (1.0 + v);
                break;
            case PhaseConvention::UnitInterval:
                sum += v;
                break;
            }
        }
    }
    return sum * phi.spec().cell_area();
}

Profile row_profile(const Field& f, int j)
{
    return row_profile_from(f, j, 1);
}

Profile row_profile_from(const Field& f, int j, int i_begin)
{
    if (j < 1 || j > f.ny() || i_begin < 1 || i_begin > f.nx())
        throw UsageError("row_profile: row or start column outside the interior");
    Profile p;
    p.x.reserve(static_cast<std::size_t>(f.nx() - i_begin + 1));
    p.value.reserve(p.x.capacity());
    for (int i = i_begin; i <= f.nx(); ++i) {
        p.x.push_back(f.x(i));
        p.value.push_back(f(i, j));
    }
    return p;
}

namespace {

struct Crossings {
    int count = 0;
    double first = std::numeric_limits<double>::quiet_NaN();
};

Crossings find_crossings(const Profile& p, double level)
{
    Crossings c;
    for (std::size_t k = 0; k + 1 < p.value.size(); ++k) {
        const double a = p.value[k];
        const double b = p.value[k + 1];
        if ((a >= level) == (b >= level))
            continue;
        if (c.count == 0)
            c.first = p.x[k] + (level - a) / (b - a) * (p.x[k + 1] - p.x[k]);
        ++c.count;
    }
    return c;
}

}  // namespace

double interface_position(const Profile& p, double level)
{
    if (p.x.size() != p.value.size())
        throw UsageError("interface_position: profile coordinates and values differ in length");
    const Crossings c = find_crossings(p, level);
    if (c.count != 1)
        throw DetectionError("interface_position: expected exactly one crossing of level " +
                                 std::to_string(level) + ", found " + std::to_string(c.count),
                             c.count);
    return c.first;
}

double interface_position_1d(const Field& phi, double level)
{
    if (!phi.spec().is_1d())
        throw UsageError("interface_position_1d: field is not 1D; use a row profile");
    return interface_position(row_profile(phi), level);
}

double interface_width(const Profile& p, double lo, double hi)
{
    if (!(lo < hi))
        throw UsageError("interface_width: lo must be below hi");
    return std::abs(interface_position(p, hi) - interface_position(p, lo));
}

double interface_width(const Field& phi, double lo, double hi)
{
    if (!phi.spec().is_1d())
        throw UsageError("interface_width: field is not 1D; use a row profile");
    return interface_width(row_profile(phi), lo, hi);
}

std::array<double, 2> default_width_levels(PhaseConvention convention)
{
    if (convention == PhaseConvention::UnitInterval)
        return {0.1, 0.9};
    return {-0.8, 0.8};
}

double mid_level(PhaseConvention convention)
{
    return convention == PhaseConvention::UnitInterval ? 0.5 : 0.0;
}

double total_enthalpy(const Field& u, const Field& phi, double latent_heat)
{
    if (!(u.spec() == phi.spec()))
        throw UsageError("total_enthalpy: u and phi use different grids");
    const double half = 0.5 * latent_heat;
    double sum = 0.0;
    for (int j = 1; j <= u.ny(); ++j)
        for (int i = 1; i <= u.nx(); ++i)
            sum += u(i, j) + half * phi(i, j);
    return sum * u.spec().cell_area();
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw UsageError("fit_line: need at least two (x, y) pairs of equal length");
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = x[k] - mx;
        const double dy = y[k] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0))
        throw UsageError("fit_line: x values are all equal");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = y[k] - (fit.intercept + fit.slope * x[k]);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

SqrtFit fit_sqrt_growth(std::span<const double> times, std::span<const double> positions)
{
    if (times.size() != positions.size())
        throw UsageError("fit_sqrt_growth: times and positions differ in length");
    if (times.size() < 3)
        throw UsageError("fit_sqrt_growth: need at least 3 samples");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || !std::isfinite(positions[k]))
            throw UsageError("fit_sqrt_growth: non-finite sample");
        if (positions[k] < 0.0)
            throw UsageError("fit_sqrt_growth: positions must be non-negative");
        if (k > 0 && !(times[k] > times[k - 1]))
            throw UsageError("fit_sqrt_growth: times must be strictly increasing");
    }

    std::vector<double> squared(positions.size());
    std::transform(positions.begin(), positions.end(), squared.begin(),
                   [](double s) { return s * s; });
    const LinearFit line = fit_line(times, squared);

    SqrtFit fit;
    fit.slope = line.slope;
    fit.r_squared = line.r_squared;
    if (!(line.slope > 0.0)) {
        fit.degenerate = true;
        fit.beta = std::numeric_limits<double>::quiet_NaN();
        fit.t0 = std::numeric_limits<double>::quiet_NaN();
        return fit;
    }
    fit.beta = std::sqrt(line.slope);
    fit.t0 = -line.intercept / line.slope;
    return fit;
}

SqrtFit fit_sqrt_growth_tail(std::span<const double> times, std::span<const double> positions,
                             double fraction)
{
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw UsageError("fit_sqrt_growth_tail: fraction must lie in (0, 1]");
    if (times.size() != positions.size())
        throw UsageError("fit_sqrt_growth_tail: times and positions differ in length");
    const std::size_t n = times.size();
    std::size_t keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    keep = std::min(n, std::max<std::size_t>(keep, 3));
    return fit_sqrt_growth(times.subspan(n - keep), positions.subspan(n - keep));
}

double neumann_relation(double beta)
{
    const double h = 0.5 * beta;
    return std::sqrt(std::numbers::pi) * h * std::exp(h * h) * std::erf(h);
}

double neumann_beta(double stefan_number)
{
    if (!(stefan_number > 0.0) || !std::isfinite(stefan_number))
        throw UsageError("neumann_beta: Stefan number must be positive");
    double lo = 1e-6;
    double hi = 10.0;
    if (stefan_number < neumann_relation(lo) || stefan_number > neumann_relation(hi))
        throw UsageError("neumann_beta: Stefan number outside the bracket [1e-6, 10] in beta");
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (neumann_relation(mid) < stefan_number)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Bilinear interpolation between cell centers; positions within half a cell
// of the edge use the edge cell values.
double sample_bilinear(const Field& f, double x, double y)
{
    const GridSpec& g = f.spec();
    const double fi = std::clamp(x / g.dx + 0.5, 1.0, static_cast<double>(g.nx));
    const double fj = std::clamp(y / g.dy + 0.5, 1.0, static_cast<double>(g.ny));
    const int i0 = std::min(static_cast<int>(fi), g.nx - 1);
    const int j0 = std::min(static_cast<int>(fj), g.ny - 1);
    const double a = fi - i0;
    const double b = fj - j0;
    return (1.0 - a) * (1.0 - b) * f(i0, j0) + a * (1.0 - b) * f(i0 + 1, j0) +
           (1.0 - a) * b * f(i0, j0 + 1) + a * b * f(i0 + 1, j0 + 1);
}

}  // namespace

std::array<double, 8> ray_radii(const Field& phi, double level, double cx, double cy)
{
    const GridSpec& g = phi.spec();
    if (g.is_1d())
        throw UsageError("ray_radii: field is not 2D");
    const double s = std::numbers::sqrt2 / 2.0;
    static constexpr int kRays = 8;
    const double dirs[kRays][2] = {{1, 0}, {s, s}, {0, 1}, {-s, s}, {-1, 0}, {-s, -s}, {0, -1}, {s, -s}};
    const double step = 0.25 * std::min(g.dx, g.dy);
    const double eps = 1e-12 * std::max(g.length_x(), g.length_y());

    const bool center_side = sample_bilinear(phi, cx, cy) >= level;
    std::array<double, 8> radii{};
    for (int k = 0; k < kRays; ++k) {
        double prev_r = 0.0;
        double prev_v = sample_bilinear(phi, cx, cy);
        bool found = false;
        for (int n = 1;; ++n) {
            const double r = n * step;
            const double x = cx + r * dirs[k][0];
            const double y = cy + r * dirs[k][1];
            if (x < -eps || y < -eps || x > g.length_x() + eps || y > g.length_y() + eps)
                break;
            const double v = sample_bilinear(phi, x, y);
            if ((v >= level) != center_side) {
                radii[static_cast<std::size_t>(k)] = prev_r + (level - prev_v) / (v - prev_v) * (r - prev_r);
                found = true;
                break;
            }
            prev_r = r;
            prev_v = v;
        }
        if (!found)
            throw DetectionError("ray_radii: ray " + std::to_string(k) +
                                     " leaves the domain without crossing level " +
                                     std::to_string(level),
                                 0);
    }
    return radii;
}

std::array<double, 8> ray_radii(const Field& phi, double level)
{
    return ray_radii(phi, level, 0.5 * phi.spec().length_x(), 0.5 * phi.spec().length_y());
}

double mean_radius(const Field& phi, double level)
{
    const auto r = ray_radii(phi, level);
    double sum = 0.0;
    for (double v : r)
        sum += v;
    return sum / static_cast<double>(r.size());
}

double radial_asymmetry(const Field& phi, double level)
{
    const auto r = ray_radii(phi, level);
    const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    double sum = 0.0;
    for (double v : r)
        sum += v;
    return (*hi - *lo) / (sum / static_cast<double>(r.size()));
}

}  // namespace phasefield
