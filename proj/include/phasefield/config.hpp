#pragma once

#include "phasefield/analysis.hpp"
#include "phasefield/grid.hpp"
#include "phasefield/models.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace phasefield {

enum class ModelKind { Caginalp, AllenCahn, KarmaRappel1d, MovingFrame1d, Dissolution };

std::string_view model_name(ModelKind kind);

using ModelParams = std::variant<CaginalpParams, AllenCahnParams, KarmaRappelParams,
                                 MovingFrameParams, DissolutionParams>;

enum class SeedKind { Disk, Front1d };

/// Initial data. The phase field follows the disk or front geometry; the
/// coupled field (u or c) uses the same geometry with its own end values.
struct SeedSpec {
    SeedKind kind = SeedKind::Front1d;
    DiskSeed disk{};
    FrontSeed front{};
    double aux_inside = 0.0;   // disk: coupled field inside
    double aux_outside = 0.0;  // disk: coupled field outside
    double aux_left = 0.0;     // front: coupled field left of x0
    double aux_right = 0.0;    // front: coupled field right of x0
};

struct RunConfig {
    ModelKind model = ModelKind::Caginalp;
    GridSpec grid{};
    Boundaries bc{};
    ModelParams params{};
    std::optional<double> dt;  // empty = auto (half the model bound)
    long nsteps = 1;           // time steps, or relaxation budget for moving_frame_1d
    SeedSpec seed{};
    long output_every = 1;
    std::string outdir = "output";
    bool snapshots = true;
    double relax_tol = 1e-6;  // moving_frame_1d only

    void validate() const;
};

/// Parses the line-oriented `key = value` format. `#` starts a comment.
/// Throws ConfigError carrying the line number (syntax) or the key (validation).
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; an unreadable file is a ConfigError naming the path.
RunConfig load_config(const std::string& path);

/// Phase convention used for volumes and levels of a model.
PhaseConvention model_convention(ModelKind kind);

/// Largest explicit dt the stepper of a model accepts.
double model_max_dt(const RunConfig& cfg);

/// cfg.dt when given, otherwise half of model_max_dt.
double effective_dt(const RunConfig& cfg);

}  // namespace phasefield
