#include "phasefield/models.hpp"

#include "phasefield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace phasefield {

void CaginalpParams::validate() const
{
    if (!(latent_heat > 0.0))
        throw ConfigError("params.latent_heat must be > 0", "params.latent_heat");
}

void AllenCahnParams::validate() const
{
    if (!(mobility > 0.0))
        throw ConfigError("params.mobility must be > 0", "params.mobility");
    if (!(std::abs(beta) < 0.5))
        throw ConfigError("params.beta must satisfy |beta| < 0.5", "params.beta");
    if (!(g_const > 0.0))
        throw ConfigError("params.g_const must be > 0", "params.g_const");
}

void KarmaRappelParams::validate() const
{
    if (!(tau > 0.0))
        throw ConfigError("params.tau must be > 0", "params.tau");
    if (!(width > 0.0))
        throw ConfigError("params.width must be > 0", "params.width");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ConfigError("params.lambda must be >= 0", "params.lambda");
    if (!(diffusivity > 0.0))
        throw ConfigError("params.diffusivity must be > 0", "params.diffusivity");
}

void MovingFrameParams::validate() const
{
    base.validate();
    if (!std::isfinite(velocity))
        throw ConfigError("params.velocity must be finite", "params.velocity");
    if (!std::isfinite(u_far))
        throw ConfigError("params.u_far must be finite", "params.u_far");
}

void DissolutionParams::validate() const
{
    if (!(peclet > 0.0))
        throw ConfigError("params.peclet must be > 0", "params.peclet");
    if (!(damkohler > 0.0))
        throw ConfigError("params.damkohler must be > 0", "params.damkohler");
    if (!(eps_grad > 0.0))
        throw ConfigError("params.eps_grad must be > 0", "params.eps_grad");
    if (!std::isfinite(lambda) || !std::isfinite(alpha))
        throw ConfigError("params.lambda and params.alpha must be finite", "params.lambda");
}

double caginalp_max_dt(const GridSpec& spec)
{
    return cfl_max_dt(1.0, spec);
}

double allen_cahn_max_dt(const AllenCahnParams& p, const GridSpec& spec)
{
    return cfl_max_dt(p.mobility, spec);
}

double karma_rappel_max_dt(const KarmaRappelParams& p, const GridSpec& spec)
{
    return std::min(cfl_max_dt(p.width * p.width / p.tau, spec), cfl_max_dt(p.diffusivity, spec));
}

double dissolution_max_dt(const DissolutionParams& p, const GridSpec& spec)
{
    return std::min(cfl_max_dt(1.0 / p.peclet, spec), cfl_max_dt(1.0, spec));
}

namespace {

void check_dt(const char* model, double dt, double dt_max)
{
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw UsageError(std::string(model) + ": dt must be positive and finite");
    if (dt > dt_max) {
        std::ostringstream msg;
        msg << model << ": dt = " << dt << " exceeds the stability bound " << dt_max;
        throw StabilityError(msg.str(), dt, dt_max);
    }
}

void check_same_grid(const char* model, const CoupledFields& s)
{
    if (!(s.phi.spec() == s.u.spec()))
        throw UsageError(std::string(model) + ": phi and its coupled field use different grids");
}

CoupledFields with_boundaries(const CoupledFields& s, const Boundaries& bc)
{
    CoupledFields out = s;
    apply_boundary(out.phi, bc.phi);
    apply_boundary(out.u, bc.u);
    return out;
}

}  // namespace

CoupledFields caginalp_step(const CoupledFields& s, const CaginalpParams& p, double dt,
                            const Boundaries& bc)
{
    p.validate();
    check_same_grid("caginalp_step", s);
    check_dt("caginalp_step", dt, caginalp_max_dt(s.phi.spec()));

    CoupledFields cur = with_boundaries(s, bc);
    const StencilOutput lap_phi = laplacian_5pt(cur.phi);
    const StencilOutput lap_u = laplacian_5pt(cur.u);
    const double half_latent = 0.5 * p.latent_heat;

    CoupledFields next = cur;
    for (int j = 1; j <= cur.phi.ny(); ++j) {
        for (int i = 1; i <= cur.phi.nx(); ++i) {
            const double phi = cur.phi(i, j);
            const double u = cur.u(i, j);
            const double phi_new =
                phi + dt * (lap_phi(i, j) + 0.5 * (phi - phi * phi * phi) + 2.0 * u);
            next.phi(i, j) = phi_new;
            next.u(i, j) = u + dt * lap_u(i, j) - half_latent * (phi_new - phi);
        }
    }
    apply_boundary(next.phi, bc.phi);
    apply_boundary(next.u, bc.u);
    return next;
}

Field allen_cahn_step(const Field& phi_in, const AllenCahnParams& p, double dt,
                      const BoundaryCondition& bc)
{
    p.validate();
    check_dt("allen_cahn_step", dt, allen_cahn_max_dt(p, phi_in.spec()));

    Field cur = phi_in;
    apply_boundary(cur, bc);
    const StencilOutput lap = laplacian_5pt(cur);
    const double third_root = 0.5 - p.beta;
    const double drive = 4.0 * p.g_const;
    const double rate = dt * p.mobility;

    Field next = cur;
    for (int j = 1; j <= cur.ny(); ++j) {
        for (int i = 1; i <= cur.nx(); ++i) {
            const double phi = cur(i, j);
            next(i, j) = phi + rate * (lap(i, j) + drive * phi * (1.0 - phi) * (phi - third_root));
        }
    }
    apply_boundary(next, bc);
    return next;
}

CoupledFields karma_rappel_step(const CoupledFields& s, const KarmaRappelParams& p, double dt,
                                const Boundaries& bc)
{
    p.validate();
    check_same_grid("karma_rappel_step", s);
    if (!s.phi.spec().is_1d())
        throw UsageError("karma_rappel_step: the system is one-dimensional (ny must be 1)");
    check_dt("karma_rappel_step", dt, karma_rappel_max_dt(p, s.phi.spec()));

    CoupledFields cur = with_boundaries(s, bc);
    const StencilOutput phi_xx = second_derivative(cur.phi, Axis::X);
    const StencilOutput u_xx = second_derivative(cur.u, Axis::X);
    const double w2 = p.width * p.width;
    const double rate = dt / p.tau;

    CoupledFields next = cur;
    for (int i = 1; i <= cur.phi.nx(); ++i) {
        const double phi = cur.phi(i, 1);
        const double u = cur.u(i, 1);
        const double q = 1.0 - phi * phi;
        const double phi_new = phi + rate * (w2 * phi_xx(i, 1) + (phi - p.lambda * u * q) * q);
        next.phi(i, 1) = phi_new;
        next.u(i, 1) = u + dt * p.diffusivity * u_xx(i, 1) + 0.5 * (phi_new - phi);
    }
    apply_boundary(next.phi, bc.phi);
    apply_boundary(next.u, bc.u);
    return next;
}

CoupledFields dissolution_step(const CoupledFields& s, const DissolutionParams& p, double dt,
                               const Boundaries& bc)
{
    p.validate();
    check_same_grid("dissolution_step", s);
    if (s.phi.spec().is_1d())
        throw UsageError("dissolution_step: the system is two-dimensional (ny must be >= 3)");
    check_dt("dissolution_step", dt, dissolution_max_dt(p, s.phi.spec()));

    CoupledFields cur = with_boundaries(s, bc);
    const StencilOutput lap_phi = laplacian_5pt(cur.phi);
    const StencilOutput grad = grad_magnitude(cur.phi);
    const StencilOutput kappa = curvature(cur.phi, p.eps_grad);
    const StencilOutput lap_c = laplacian_5pt(cur.u);
    const double rate = dt / p.peclet;

    CoupledFields next = cur;
    for (int j = 1; j <= cur.phi.ny(); ++j) {
        for (int i = 1; i <= cur.phi.nx(); ++i) {
            const double phi = cur.phi(i, j);
            const double c = cur.u(i, j);
            const double g = grad(i, j);
            const double phi_new = phi + rate * (lap_phi(i, j) + (1.0 - phi * phi) * (phi - p.lambda * c) -
                                                 kappa(i, j) * g);
            const double phi_t = (phi_new - phi) / dt;
            double reaction = 0.0;
            if (g >= p.eps_grad)
                reaction = (lap_phi(i, j) - phi_t) * (p.alpha * phi_t) / (p.damkohler * g);
            next.phi(i, j) = phi_new;
            next.u(i, j) = c + dt * (lap_c(i, j) + p.alpha * phi_t + reaction);
        }
    }
    apply_boundary(next.phi, bc.phi);
    apply_boundary(next.u, bc.u);
    return next;
}

FrameResidual moving_frame_residual(const CoupledFields& s, const MovingFrameParams& p)
{
    check_same_grid("moving_frame_residual", s);
    if (!s.phi.spec().is_1d())
        throw UsageError("moving_frame_residual: the system is one-dimensional (ny must be 1)");

    const KarmaRappelParams& b = p.base;
    const StencilOutput phi_x = first_derivative(s.phi, Axis::X);
    const StencilOutput phi_xx = second_derivative(s.phi, Axis::X);
    const StencilOutput u_x = first_derivative(s.u, Axis::X);
    const StencilOutput u_xx = second_derivative(s.u, Axis::X);
    const double w2 = b.width * b.width;
    const double v = p.velocity;

    FrameResidual r{Field(s.phi.spec(), 0.0), Field(s.phi.spec(), 0.0)};
    for (int i = 1; i <= s.phi.nx(); ++i) {
        const double phi = s.phi(i, 1);
        const double q = 1.0 - phi * phi;
        r.phi(i, 1) = b.tau * v * phi_x(i, 1) + w2 * phi_xx(i, 1) +
                      (phi - b.lambda * s.u(i, 1) * q) * q;
        r.u(i, 1) = v * u_x(i, 1) + b.diffusivity * u_xx(i, 1) - 0.5 * v * phi_x(i, 1);
    }
    return r;
}

void apply_frame_boundary(CoupledFields& s, const MovingFrameParams& p)
{
    Field& phi = s.phi;
    Field& u = s.u;
    const int nx = phi.nx();
    phi(0, 1) = -2.0 - phi(1, 1);
    phi(nx + 1, 1) = 2.0 - phi(nx, 1);
    u(0, 1) = -u(1, 1);
    u(nx + 1, 1) = 2.0 * p.u_far - u(nx, 1);
    for (Field* f : {&phi, &u}) {
        for (int i = 0; i <= nx + 1; ++i) {
            (*f)(i, 0) = (*f)(i, 1);
            (*f)(i, 2) = (*f)(i, 1);
        }
    }
}

namespace {

double max_abs_interior(const Field& a, const Field& b)
{
    double m = 0.0;
    for (int i = 1; i <= a.nx(); ++i) {
        const double ra = std::abs(a(i, 1));
        const double rb = std::abs(b(i, 1));
        if (!std::isfinite(ra) || !std::isfinite(rb))
            return std::numeric_limits<double>::infinity();
        m = std::max(m, std::max(ra, rb));
    }
    return m;
}

}  // namespace

RelaxResult moving_frame_relax(const MovingFrameParams& p, const GridSpec& spec, double tol,
                               long max_iters)
{
    spec.validate();
    if (!spec.is_1d())
        throw UsageError("moving_frame_relax: the system is one-dimensional (ny must be 1)");

    CoupledFields init{Field(spec, 0.0), Field(spec, 0.0)};
    const double center = 0.5 * spec.length_x();
    const double w = p.base.width * std::sqrt(2.0);
    for (int i = 1; i <= spec.nx; ++i) {
        const double phi = std::tanh((init.phi.x(i) - center) / w);
        init.phi(i, 1) = phi;
        init.u(i, 1) = 0.5 * p.u_far * (1.0 + phi);
    }
    return moving_frame_relax(p, std::move(init), tol, max_iters);
}

RelaxResult moving_frame_relax(const MovingFrameParams& p, CoupledFields state, double tol,
                               long max_iters)
{
    p.validate();
    check_same_grid("moving_frame_relax", state);
    const GridSpec& spec = state.phi.spec();
    if (!spec.is_1d())
        throw UsageError("moving_frame_relax: the system is one-dimensional (ny must be 1)");
    if (!(tol > 0.0))
        throw UsageError("moving_frame_relax: tol must be positive");
    if (max_iters < 0)
        throw UsageError("moving_frame_relax: max_iters must be non-negative");

    const KarmaRappelParams& b = p.base;
    double dt = 0.5 * karma_rappel_max_dt(b, spec);
    if (p.velocity != 0.0) {
        // central advection under forward Euler also needs dt <= 2 D / V^2
        const double diff = std::min(b.diffusivity, b.width * b.width / b.tau);
        dt = std::min(dt, diff / (p.velocity * p.velocity));
    }
    const double phi_rate = dt / b.tau;

    RelaxResult result;
    apply_frame_boundary(state, p);
    for (long it = 0;; ++it) {
        const FrameResidual r = moving_frame_residual(state, p);
        const double res = max_abs_interior(r.phi, r.u);
        result.residual = res;
        result.iterations = it;
        if (res <= tol) {
            result.converged = true;
            break;
        }
        if (it == max_iters || !std::isfinite(res))
            break;

        // phi increment with its component along phi_x removed
        const StencilOutput phi_x = first_derivative(state.phi, Axis::X);
        double along = 0.0;
        double norm = 0.0;
        for (int i = 1; i <= spec.nx; ++i) {
            along += r.phi(i, 1) * phi_x(i, 1);
            norm += phi_x(i, 1) * phi_x(i, 1);
        }
        const double shift = norm > 0.0 ? along / norm : 0.0;
        for (int i = 1; i <= spec.nx; ++i) {
            state.phi(i, 1) += phi_rate * (r.phi(i, 1) - shift * phi_x(i, 1));
            state.u(i, 1) += dt * r.u(i, 1);
        }
        apply_frame_boundary(state, p);
    }
    result.fields = std::move(state);
    return result;
}

}  // namespace phasefield
