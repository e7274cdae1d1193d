#include "phasefield/stencils.hpp"

#include "phasefield/errors.hpp"

#include <algorithm>
#include <cmath>

namespace phasefield {

StencilOutput laplacian_5pt(const Field& phi)
{
    const GridSpec& g = phi.spec();
    const double ax = 1.0 / (g.dx * g.dx);
    const double ay = 1.0 / (g.dy * g.dy);
    StencilOutput out(g, 0.0);
    for (int j = 1; j <= g.ny; ++j) {
        for (int i = 1; i <= g.nx; ++i) {
            const double c2 = 2.0 * phi(i, j);
            const double xx = ((phi(i + 1, j) + phi(i - 1, j)) - c2) * ax;
            if (g.is_1d()) {
                out(i, j) = xx;
            } else {
                const double yy = ((phi(i, j + 1) + phi(i, j - 1)) - c2) * ay;
                out(i, j) = xx + yy;
            }
        }
    }
    return out;
}

StencilOutput second_derivative(const Field& phi, Axis axis)
{
    const GridSpec& g = phi.spec();
    if (axis == Axis::Y && g.is_1d())
        throw UsageError("second_derivative: y axis requested on a 1D grid");
    const int di = axis == Axis::X ? 1 : 0;
    const int dj = axis == Axis::Y ? 1 : 0;
    const double h = axis == Axis::X ? g.dx : g.dy;
    const double a = 1.0 / (h * h);
    StencilOutput out(g, 0.0);
    for (int j = 1; j <= g.ny; ++j)
        for (int i = 1; i <= g.nx; ++i)
            out(i, j) = ((phi(i + di, j + dj) + phi(i - di, j - dj)) - 2.0 * phi(i, j)) * a;
    return out;
}

StencilOutput first_derivative(const Field& phi, Axis axis)
{
    const GridSpec& g = phi.spec();
    if (axis == Axis::Y && g.is_1d())
        throw UsageError("first_derivative: y axis requested on a 1D grid");
    const int di = axis == Axis::X ? 1 : 0;
    const int dj = axis == Axis::Y ? 1 : 0;
    const double h = axis == Axis::X ? g.dx : g.dy;
    const double a = 1.0 / (2.0 * h);
    StencilOutput out(g, 0.0);
    for (int j = 1; j <= g.ny; ++j)
        for (int i = 1; i <= g.nx; ++i)
            out(i, j) = (phi(i + di, j + dj) - phi(i - di, j - dj)) * a;
    return out;
}

StencilOutput grad_magnitude(const Field& phi)
{
    const GridSpec& g = phi.spec();
    const double ax = 1.0 / (2.0 * g.dx);
    const double ay = 1.0 / (2.0 * g.dy);
    StencilOutput out(g, 0.0);
    for (int j = 1; j <= g.ny; ++j) {
        for (int i = 1; i <= g.nx; ++i) {
            const double px = (phi(i + 1, j) - phi(i - 1, j)) * ax;
            const double py = g.is_1d() ? 0.0 : (phi(i, j + 1) - phi(i, j - 1)) * ay;
            out(i, j) = std::sqrt(px * px + py * py);
        }
    }
    return out;
}

StencilOutput curvature(const Field& phi, double eps_grad)
{
    if (!(eps_grad > 0.0))
        throw UsageError("curvature: eps_grad must be positive");
    const GridSpec& g = phi.spec();
    StencilOutput out(g, 0.0);
    if (g.is_1d())
        return out;

    const double hx = 1.0 / (2.0 * g.dx);
    const double hy = 1.0 / (2.0 * g.dy);
    const double ax = 1.0 / (g.dx * g.dx);
    const double ay = 1.0 / (g.dy * g.dy);
    const double axy = 1.0 / (4.0 * g.dx * g.dy);
    for (int j = 1; j <= g.ny; ++j) {
        for (int i = 1; i <= g.nx; ++i) {
            const double px = (phi(i + 1, j) - phi(i - 1, j)) * hx;
            const double py = (phi(i, j + 1) - phi(i, j - 1)) * hy;
            const double norm2 = px * px + py * py;
            const double norm = std::sqrt(norm2);
            if (norm < eps_grad)
                continue;
            const double c2 = 2.0 * phi(i, j);
            const double pxx = ((phi(i + 1, j) + phi(i - 1, j)) - c2) * ax;
            const double pyy = ((phi(i, j + 1) + phi(i, j - 1)) - c2) * ay;
            const double pxy = ((phi(i + 1, j + 1) + phi(i - 1, j - 1)) -
                                (phi(i + 1, j - 1) + phi(i - 1, j + 1))) *
                               axy;
            const double num = (pxx * (py * py) + pyy * (px * px)) - 2.0 * (px * py) * pxy;
            out(i, j) = num / (norm2 * norm);
        }
    }
    return out;
}

Field euler_step(const Field& phi, const StencilOutput& rhs, double dt)
{
    if (!(phi.spec() == rhs.spec()))
        throw UsageError("euler_step: field and rhs live on different grids");
    Field out = phi;
    for (int j = 1; j <= phi.ny(); ++j)
        for (int i = 1; i <= phi.nx(); ++i)
            out(i, j) = phi(i, j) + dt * rhs(i, j);
    return out;
}

double cfl_max_dt(double diff_coeff, const GridSpec& spec)
{
    if (!(diff_coeff > 0.0))
        throw UsageError("cfl_max_dt: diffusion coefficient must be positive");
    const double h = spec.is_1d() ? spec.dx : std::min(spec.dx, spec.dy);
    return kCflSafety * h * h / (2.0 * spec.dims() * diff_coeff);
}

}  // namespace phasefield
