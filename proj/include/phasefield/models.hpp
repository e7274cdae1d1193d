#pragma once

#include "phasefield/grid.hpp"
#include "phasefield/stencils.hpp"

namespace phasefield {

// Phase conventions: phi = -1 solid, +1 liquid for the Caginalp,
// Karma-Rappel, moving-frame and dissolution systems; phi in [0, 1] for
// the modified Allen-Cahn equation.

struct CaginalpParams {
    double latent_heat = 1.0;
    void validate() const;
};

struct AllenCahnParams {
    double mobility = 1.0;
    double beta = 0.0;     // driving-force bias, |beta| < 0.5
    double g_const = 1.0;  // constant stand-in for g(phi)
    void validate() const;
};

struct KarmaRappelParams {
    double tau = 1.0;
    double width = 1.0;
    double lambda = 1.0;
    double diffusivity = 1.0;
    void validate() const;
};

struct MovingFrameParams {
    KarmaRappelParams base{};
    double velocity = 0.0;
    double u_far = 0.0;  // u on the liquid end
    void validate() const;
};

struct DissolutionParams {
    double peclet = 1.0;
    double lambda = 1.0;
    double alpha = 0.0;
    double damkohler = 1.0;
    double eps_grad = kDefaultEpsGrad;
    void validate() const;
};

/// Phase field plus its coupled scalar: temperature u, or concentration c
/// for the dissolution model.
struct CoupledFields {
    Field phi;
    Field u;
};

/// Boundary conditions for the two fields of a coupled system. Implicitly
/// built from a single condition that applies to both.
struct Boundaries {
    BoundaryCondition phi{};
    BoundaryCondition u{};

    Boundaries() = default;
    Boundaries(const BoundaryCondition& both) : phi(both), u(both) {}  // NOLINT
    Boundaries(const BoundaryCondition& phi_bc, const BoundaryCondition& u_bc)
        : phi(phi_bc), u(u_bc)
    {
    }
};

/// Largest accepted dt per model (already includes kCflSafety).
double caginalp_max_dt(const GridSpec& spec);
double allen_cahn_max_dt(const AllenCahnParams& p, const GridSpec& spec);
double karma_rappel_max_dt(const KarmaRappelParams& p, const GridSpec& spec);
double dissolution_max_dt(const DissolutionParams& p, const GridSpec& spec);

// Steppers apply the boundary conditions to their inputs, advance one
// forward-Euler step, and return outputs with fresh ghost layers. In coupled
// systems phi is advanced first and its increment (phi_new - phi_old) stands
// in for dt * phi_t in the second equation. A dt above the model bound
// throws StabilityError.

/// u_t + (l/2) phi_t = lap u,  phi_t = lap phi + (phi - phi^3)/2 + 2u.
CoupledFields caginalp_step(const CoupledFields& s, const CaginalpParams& p, double dt,
                            const Boundaries& bc);

/// phi_t = M [lap phi + 4 g phi (1 - phi)(phi - 1/2 + beta)].
Field allen_cahn_step(const Field& phi, const AllenCahnParams& p, double dt,
                      const BoundaryCondition& bc);

/// 1D only: tau phi_t = W^2 phi_xx + (phi - lambda u (1 - phi^2))(1 - phi^2),
/// u_t = D u_xx + phi_t / 2.
CoupledFields karma_rappel_step(const CoupledFields& s, const KarmaRappelParams& p, double dt,
                                const Boundaries& bc);

/// 2D only: phi_t = [lap phi + (1 - phi^2)(phi - lambda c) - kappa |grad phi|] / Pe,
/// c_t = lap c + alpha phi_t + (lap phi - phi_t) alpha phi_t / (Da |grad phi|).
/// The last term is dropped where |grad phi| < eps_grad.
CoupledFields dissolution_step(const CoupledFields& s, const DissolutionParams& p, double dt,
                               const Boundaries& bc);

struct FrameResidual {
    StencilOutput phi;
    StencilOutput u;
};

/// Pointwise residuals of the steady system in the frame x - V t:
///   R_phi = tau V phi_x + W^2 phi_xx + (phi - lambda u (1 - phi^2))(1 - phi^2)
///   R_u   = V u_x + D u_xx - (V/2) phi_x
/// Reads ghosts as-is. 1D only.
FrameResidual moving_frame_residual(const CoupledFields& s, const MovingFrameParams& p);

struct RelaxResult {
    CoupledFields fields;
    double residual = 0.0;  // max |R| over both equations at the returned state
    long iterations = 0;
    bool converged = false;
};

/// Pseudo-time relaxation of the moving-frame system with phi = -1, u = 0 at
/// the solid (left) end and phi = +1, u = u_far at the liquid (right) end.
/// The translation mode is projected out of every phi increment so the front
/// stays centered; a steady state with residual <= tol exists only when V is
/// the selected front speed. Non-convergence is reported, not thrown.
RelaxResult moving_frame_relax(const MovingFrameParams& p, const GridSpec& spec, double tol,
                               long max_iters);

/// Same, starting from a caller-provided state.
RelaxResult moving_frame_relax(const MovingFrameParams& p, CoupledFields initial, double tol,
                               long max_iters);

/// Ghost layers of the far-field conditions used by moving_frame_relax.
void apply_frame_boundary(CoupledFields& s, const MovingFrameParams& p);

}  // namespace phasefield
