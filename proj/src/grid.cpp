#include "phasefield/grid.hpp"

#include "phasefield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

namespace phasefield {

void GridSpec::validate() const
{
    if (nx < 3)
        throw ConfigError("grid.nx must be >= 3 (got " + std::to_string(nx) + ")", "grid.nx");
    if (ny != 1 && ny < 3)
        throw ConfigError("grid.ny must be 1 (1D) or >= 3 (got " + std::to_string(ny) + ")",
                          "grid.ny");
    if (!(dx > 0.0) || !std::isfinite(dx))
        throw ConfigError("grid.dx must be a positive finite number", "grid.dx");
    if (!(dy > 0.0) || !std::isfinite(dy))
        throw ConfigError("grid.dy must be a positive finite number", "grid.dy");
}

Field::Field(const GridSpec& spec, double fill)
    : spec_(spec),
      values_(static_cast<std::size_t>(spec.nx + 2) * static_cast<std::size_t>(spec.ny + 2), fill)
{
}

bool Field::interior_finite() const noexcept
{
    for (int j = 1; j <= ny(); ++j)
        for (int i = 1; i <= nx(); ++i)
            if (!std::isfinite((*this)(i, j)))
                return false;
    return true;
}

double Field::interior_max_abs() const noexcept
{
    double m = 0.0;
    for (int j = 1; j <= ny(); ++j)
        for (int i = 1; i <= nx(); ++i)
            m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

double Field::interior_min() const noexcept
{
    double m = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= ny(); ++j)
        for (int i = 1; i <= nx(); ++i)
            m = std::min(m, (*this)(i, j));
    return m;
}

double Field::interior_max() const noexcept
{
    double m = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= ny(); ++j)
        for (int i = 1; i <= nx(); ++i)
            m = std::max(m, (*this)(i, j));
    return m;
}

double Field::interior_sum() const noexcept
{
    double s = 0.0;
    for (int j = 1; j <= ny(); ++j)
        for (int i = 1; i <= nx(); ++i)
            s += (*this)(i, j);
    return s;
}

Field new_field(const GridSpec& spec, double fill)
{
    spec.validate();
    return Field(spec, fill);
}

namespace {

// Ghost value for one face given the adjacent interior value and the
// interior value on the opposite edge.
double ghost_value(const BoundaryCondition& bc, double adjacent, double opposite)
{
    switch (bc.kind) {
    case BoundaryKind::ZeroFluxNeumann:
        return adjacent;
    case BoundaryKind::Periodic:
        return opposite;
    case BoundaryKind::Dirichlet:
        return 2.0 * bc.dirichlet_value - adjacent;
    }
    return adjacent;
}

}  // namespace

void apply_boundary(Field& f, const BoundaryCondition& bc)
{
    const int nx = f.nx();
    const int ny = f.ny();

    for (int j = 1; j <= ny; ++j) {
        f(0, j) = ghost_value(bc, f(1, j), f(nx, j));
        f(nx + 1, j) = ghost_value(bc, f(nx, j), f(1, j));
    }

    if (f.spec().is_1d()) {
        for (int i = 0; i <= nx + 1; ++i) {
            f(i, 0) = f(i, 1);
            f(i, 2) = f(i, 1);
        }
        return;
    }

    for (int i = 0; i <= nx + 1; ++i) {
        f(i, 0) = ghost_value(bc, f(i, 1), f(i, ny));
        f(i, ny + 1) = ghost_value(bc, f(i, ny), f(i, 1));
    }
}

bool seed_disk(Field& f, const DiskSeed& s)
{
    if (!(s.radius > 0.0))
        throw UsageError("seed_disk: radius must be positive");
    if (!(s.smooth_width >= 0.0))
        throw UsageError("seed_disk: smooth_width must be non-negative");

    const GridSpec& g = f.spec();
    const double diagonal = std::hypot(g.length_x(), g.is_1d() ? 0.0 : g.length_y());
    const bool fits = s.radius <= diagonal;
    if (!fits)
        std::clog << "warning: seed_disk radius " << s.radius << " exceeds the domain diagonal "
                  << diagonal << "\n";

    const double mid = 0.5 * (s.inside + s.outside);
    const double half = 0.5 * (s.outside - s.inside);
    for (int j = 1; j <= f.ny(); ++j) {
        const double oy = f.y(j) - s.cy;
        for (int i = 1; i <= f.nx(); ++i) {
            const double ox = f.x(i) - s.cx;
            const double r = std::sqrt(ox * ox + oy * oy);
            if (s.smooth_width > 0.0)
                f(i, j) = mid + half * std::tanh((r - s.radius) / s.smooth_width);
            else
                f(i, j) = r <= s.radius ? s.inside : s.outside;
        }
    }
    return fits;
}

void seed_front_1d(Field& f, const FrontSeed& s)
{
    if (!(s.width >= 0.0))
        throw UsageError("seed_front_1d: width must be non-negative");

    const double mid = 0.5 * (s.left + s.right);
    const double half = 0.5 * (s.right - s.left);
    for (int j = 1; j <= f.ny(); ++j) {
        for (int i = 1; i <= f.nx(); ++i) {
            const double x = f.x(i);
            if (s.width > 0.0)
                f(i, j) = mid + half * std::tanh((x - s.x0) / s.width);
            else
                f(i, j) = x < s.x0 ? s.left : s.right;
        }
    }
}

}  // namespace phasefield
