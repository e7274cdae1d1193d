#pragma once

#include "phasefield/config.hpp"
#include "phasefield/output.hpp"

#include <functional>
#include <vector>

namespace phasefield {

/// Called at every recorded step with the current phase field and, for
/// coupled models, the coupled field (nullptr for Allen-Cahn).
using RunObserver =
    std::function<void(const TimeSeriesRecord& record, const Field& phi, const Field* aux)>;

/// Seeds the fields, advances nsteps steps, and records diagnostics at step 0,
/// every output_every steps, and at nsteps. Writes `<outdir>/timeseries.csv`
/// and, when cfg.snapshots is set, one snapshot per field per record.
///
/// An explicit dt above the model bound throws StabilityError before any
/// output is written. A non-finite field throws NumericalAbort carrying the
/// step index. moving_frame_1d runs the relaxation with nsteps as the
/// iteration budget and throws NonConvergence after writing its outputs.
std::vector<TimeSeriesRecord> run_simulation(const RunConfig& cfg,
                                             const RunObserver& observer = {});

/// Initial fields of a time-dependent run.
CoupledFields seed_fields(const RunConfig& cfg);

/// Diagnostics of one state, as recorded by run_simulation.
TimeSeriesRecord measure(const RunConfig& cfg, long step, double time, const Field& phi,
                         const Field* aux);

}  // namespace phasefield
