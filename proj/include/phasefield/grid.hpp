#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace phasefield {

/// Uniform cell-centered grid. Cell (i, j), 1-based, has its center at
/// ((i - 1/2) dx, (j - 1/2) dy). ny == 1 denotes a 1D grid.
struct GridSpec {
    int nx = 3;
    int ny = 1;
    double dx = 1.0;
    double dy = 1.0;

    bool is_1d() const noexcept { return ny == 1; }
    int dims() const noexcept { return is_1d() ? 1 : 2; }
    double cell_area() const noexcept { return is_1d() ? dx : dx * dy; }
    double length_x() const noexcept { return nx * dx; }
    double length_y() const noexcept { return ny * dy; }

    /// Throws ConfigError naming the offending key ("grid.nx", ...).
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

/// Scalar unknown on a grid with one ghost layer on every side.
/// Storage is row-major with x fastest: (i, j) for i in [0, nx+1],
/// j in [0, ny+1]; interior cells are 1..nx by 1..ny. For measures
/// (volume, enthalpy) a 1D field's cell size is dx.
class Field {
public:
    Field() = default;
    Field(const GridSpec& spec, double fill);

    const GridSpec& spec() const noexcept { return spec_; }
    int nx() const noexcept { return spec_.nx; }
    int ny() const noexcept { return spec_.ny; }
    int stride() const noexcept { return spec_.nx + 2; }

    double& operator()(int i, int j) noexcept { return values_[index(i, j)]; }
    double operator()(int i, int j) const noexcept { return values_[index(i, j)]; }

    double x(int i) const noexcept { return (i - 0.5) * spec_.dx; }
    double y(int j) const noexcept { return (j - 0.5) * spec_.dy; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool interior_finite() const noexcept;
    double interior_max_abs() const noexcept;
    double interior_min() const noexcept;
    double interior_max() const noexcept;

    /// Sum over interior cells, without the cell-area factor.
    double interior_sum() const noexcept;

    bool operator==(const Field&) const = default;

private:
    std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(spec_.nx + 2) +
               static_cast<std::size_t>(i);
    }

    GridSpec spec_{};
    std::vector<double> values_;
};

enum class BoundaryKind { ZeroFluxNeumann, Periodic, Dirichlet };

struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::ZeroFluxNeumann;
    double dirichlet_value = 0.0;

    static BoundaryCondition zero_flux() { return {BoundaryKind::ZeroFluxNeumann, 0.0}; }
    static BoundaryCondition periodic() { return {BoundaryKind::Periodic, 0.0}; }
    static BoundaryCondition dirichlet(double value) { return {BoundaryKind::Dirichlet, value}; }
};

/// Validates the grid and returns a field with every value (ghosts too) set to fill.
Field new_field(const GridSpec& spec, double fill);

/// Fills the ghost layer from the interior. x ghosts are set on interior rows
/// first, then y ghosts on every column, so corners follow from the x pass.
/// On 1D grids the y ghost rows mirror the interior row.
void apply_boundary(Field& field, const BoundaryCondition& bc);

struct DiskSeed {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 1.0;
    double inside = -1.0;
    double outside = 1.0;
    double smooth_width = 0.0;  // 0 = sharp threshold
};

/// Writes a disk profile into the interior. Returns false (after a warning on
/// std::clog) when the radius exceeds the domain diagonal.
bool seed_disk(Field& field, const DiskSeed& seed);

struct FrontSeed {
    double x0 = 0.0;
    double left = -1.0;
    double right = 1.0;
    double width = 0.0;  // 0 = sharp step
};

/// Planar front along x: midpoint + (right - left)/2 * tanh((x - x0)/width).
void seed_front_1d(Field& field, const FrontSeed& seed);

}  // namespace phasefield
