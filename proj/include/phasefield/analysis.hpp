#pragma once

#include "phasefield/grid.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace phasefield {

/// How phi maps onto the solid fraction counted by phase_volume.
enum class PhaseConvention {
    SolidMinusOne,  // phi in [-1, 1], solid at -1: fraction (1 - phi)/2
    SolidOne,       // phi in [-1, 1], solid at +1: fraction (1 + phi)/2
    UnitInterval,   // phi in [0, 1]: fraction phi
};

/// Sum of the phase fraction times the cell area over interior cells.
double phase_volume(const Field& phi, PhaseConvention convention);

/// Sampled 1D profile: positions strictly increasing.
struct Profile {
    std::vector<double> x;
    std::vector<double> value;
};

/// Interior row j of a field, at cell-center x positions.
Profile row_profile(const Field& f, int j = 1);

/// Part of interior row j from cell i_begin to nx (inclusive).
Profile row_profile_from(const Field& f, int j, int i_begin);

/// Location where the profile crosses level, by linear interpolation between
/// the bracketing samples. Throws DetectionError unless there is exactly one
/// crossing.
double interface_position(const Profile& p, double level);

/// interface_position on the single row of a 1D field.
double interface_position_1d(const Field& phi, double level);

/// Distance between the lo and hi crossings of a monotone profile.
double interface_width(const Profile& p, double lo, double hi);
double interface_width(const Field& phi, double lo, double hi);

/// 10% and 90% levels of the phase range of a convention.
std::array<double, 2> default_width_levels(PhaseConvention convention);

/// Midpoint of the phase range.
double mid_level(PhaseConvention convention);

/// Sum of (u + latent_heat/2 phi) times the cell area over interior cells.
double total_enthalpy(const Field& u, const Field& phi, double latent_heat);

/// Result of regressing s^2 on t: s^2 = beta^2 (t - t0).
struct SqrtFit {
    double beta = 0.0;
    double t0 = 0.0;
    double r_squared = 0.0;
    double slope = 0.0;
    bool degenerate = false;  // slope <= 0; beta is NaN
};

/// Least-squares fit of s(t) ~ beta sqrt(t - t0). Needs at least three
/// samples, strictly increasing times, non-negative positions.
SqrtFit fit_sqrt_growth(std::span<const double> times, std::span<const double> positions);

/// Same fit restricted to the trailing fraction of the samples.
SqrtFit fit_sqrt_growth_tail(std::span<const double> times, std::span<const double> positions,
                             double fraction = 0.5);

/// Left-hand side of the one-phase Neumann relation,
/// sqrt(pi) (b/2) exp((b/2)^2) erf(b/2).
double neumann_relation(double beta);

/// Growth coefficient beta of s = beta sqrt(t) for the one-phase Stefan
/// problem with unit diffusivity: root of neumann_relation(beta) = St,
/// bisected on [1e-6, 10] to an interval width of 1e-10.
double neumann_beta(double stefan_number);

/// Level-crossing distances from (cx, cy) along the +x, +x+y, +y, -x+y, -x,
/// -x-y, -y, +x-y rays. Samples phi bilinearly at quarter-cell steps.
std::array<double, 8> ray_radii(const Field& phi, double level, double cx, double cy);

/// ray_radii about the domain center.
std::array<double, 8> ray_radii(const Field& phi, double level);

/// Mean of the eight ray radii about the domain center.
double mean_radius(const Field& phi, double level);

/// (max - min) / mean of the eight ray radii about the domain center.
double radial_asymmetry(const Field& phi, double level);

/// Ordinary least-squares line through (x, y).
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace phasefield
