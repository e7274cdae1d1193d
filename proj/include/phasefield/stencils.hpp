#pragma once

#include "phasefield/grid.hpp"

namespace phasefield {

/// Operator result on interior cells. Ghost cells are zero and carry no meaning.
using StencilOutput = Field;

enum class Axis { X, Y };

/// Safety factor applied to the explicit diffusion limit h^2 / (2 d D).
inline constexpr double kCflSafety = 0.9;

/// Default regularization threshold for |grad phi| in curvature terms.
inline constexpr double kDefaultEpsGrad = 1e-8;

// All operators read the ghost layer as-is; apply_boundary first.
// Sums of mirrored neighbours are formed before subtracting the center so
// that reflections and quarter turns of the input give bit-identical output.

/// Five-point Laplacian, with each axis divided by its own spacing.
/// The y term is skipped on 1D grids.
StencilOutput laplacian_5pt(const Field& phi);

/// Centered second difference along one axis. Throws UsageError for Axis::Y on a 1D grid.
StencilOutput second_derivative(const Field& phi, Axis axis);

/// Centered first difference (phi[+1] - phi[-1]) / 2h along one axis.
StencilOutput first_derivative(const Field& phi, Axis axis);

/// |grad phi| from centered first differences.
StencilOutput grad_magnitude(const Field& phi);

/// Mean curvature div(grad phi / |grad phi|) in its expanded form
/// (phi_xx phi_y^2 - 2 phi_x phi_y phi_xy + phi_yy phi_x^2) / |grad phi|^3.
/// Zero where |grad phi| < eps_grad, and identically zero on 1D grids.
StencilOutput curvature(const Field& phi, double eps_grad = kDefaultEpsGrad);

/// Forward Euler: phi + dt * rhs on interior cells. Ghosts are copied stale.
Field euler_step(const Field& phi, const StencilOutput& rhs, double dt);

/// Largest stable explicit step for u_t = D lap u, scaled by kCflSafety.
double cfl_max_dt(double diff_coeff, const GridSpec& spec);

}  // namespace phasefield
