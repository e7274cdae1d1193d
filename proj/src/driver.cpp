#include "phasefield/driver.hpp"

#include "phasefield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace phasefield {

namespace fs = std::filesystem;

CoupledFields seed_fields(const RunConfig& cfg)
{
    CoupledFields s{new_field(cfg.grid, 0.0), new_field(cfg.grid, 0.0)};
    const SeedSpec& seed = cfg.seed;
    if (seed.kind == SeedKind::Disk) {
        seed_disk(s.phi, seed.disk);
        DiskSeed aux = seed.disk;
        aux.inside = seed.aux_inside;
        aux.outside = seed.aux_outside;
        seed_disk(s.u, aux);
    } else {
        seed_front_1d(s.phi, seed.front);
        FrontSeed aux = seed.front;
        aux.left = seed.aux_left;
        aux.right = seed.aux_right;
        seed_front_1d(s.u, aux);
    }
    apply_boundary(s.phi, cfg.bc.phi);
    apply_boundary(s.u, cfg.bc.u);
    return s;
}

namespace {

template <typename F>
std::optional<double> try_measure(F&& f)
{
    try {
        return f();
    } catch (const DetectionError&) {
        return std::nullopt;
    }
}

int cell_containing(double coord, double h, int n)
{
    return std::clamp(static_cast<int>(std::floor(coord / h)) + 1, 1, n);
}

}  // namespace

TimeSeriesRecord measure(const RunConfig& cfg, long step, double time, const Field& phi,
                         const Field* aux)
{
    const PhaseConvention conv = model_convention(cfg.model);
    const double mid = mid_level(conv);
    const auto [lo, hi] = default_width_levels(conv);
    const GridSpec& g = phi.spec();

    TimeSeriesRecord r;
    r.step = step;
    r.time = time;
    r.volume = phase_volume(phi, conv);

    const bool radial =
        !g.is_1d() && cfg.model != ModelKind::MovingFrame1d && cfg.seed.kind == SeedKind::Disk;
    if (radial) {
        const double cx = cfg.seed.disk.cx;
        const double cy = cfg.seed.disk.cy;
        r.interface_pos = try_measure([&] {
            const auto radii = ray_radii(phi, mid, cx, cy);
            double sum = 0.0;
            for (double v : radii)
                sum += v;
            return sum / static_cast<double>(radii.size());
        });
        const int j = cell_containing(cy, g.dy, g.ny);
        const int i = cell_containing(cx, g.dx, g.nx);
        r.interface_width =
            try_measure([&] { return interface_width(row_profile_from(phi, j, i), lo, hi); });
    } else {
        const Profile p = row_profile(phi, (g.ny + 1) / 2);
        r.interface_pos = try_measure([&] { return interface_position(p, mid); });
        r.interface_width = try_measure([&] { return interface_width(p, lo, hi); });
    }

    if (cfg.model == ModelKind::Caginalp && aux != nullptr)
        r.enthalpy = total_enthalpy(*aux, phi, std::get<CaginalpParams>(cfg.params).latent_heat);
    return r;
}

namespace {

const char* aux_name(ModelKind model)
{
    return model == ModelKind::Dissolution ? "c" : "u";
}

std::vector<TimeSeriesRecord> run_moving_frame(const RunConfig& cfg, const RunObserver& observer)
{
    const auto& p = std::get<MovingFrameParams>(cfg.params);
    fs::create_directories(cfg.outdir);

    const RelaxResult res = moving_frame_relax(p, cfg.grid, cfg.relax_tol, 0);
    std::vector<TimeSeriesRecord> records;
    records.push_back(measure(cfg, 0, 0.0, res.fields.phi, &res.fields.u));
    if (observer)
        observer(records.back(), res.fields.phi, &res.fields.u);

    const RelaxResult fin = moving_frame_relax(p, cfg.grid, cfg.relax_tol, cfg.nsteps);
    if (fin.iterations > 0) {
        records.push_back(measure(cfg, fin.iterations, static_cast<double>(fin.iterations),
                                  fin.fields.phi, &fin.fields.u));
        if (observer)
            observer(records.back(), fin.fields.phi, &fin.fields.u);
    }

    write_timeseries_csv(records, fs::path(cfg.outdir) / "timeseries.csv");
    if (cfg.snapshots) {
        write_snapshot(fin.fields.phi, "phi", fin.iterations, cfg.outdir);
        write_snapshot(fin.fields.u, "u", fin.iterations, cfg.outdir);
    }
    if (!fin.converged) {
        std::ostringstream msg;
        msg << "moving-frame relaxation did not converge in " << cfg.nsteps
            << " iterations (residual " << fin.residual << ", tol " << cfg.relax_tol << ")";
        throw NonConvergence(msg.str(), fin.residual);
    }
    return records;
}

}  // namespace

std::vector<TimeSeriesRecord> run_simulation(const RunConfig& cfg, const RunObserver& observer)
{
    cfg.validate();
    if (cfg.model == ModelKind::MovingFrame1d)
        return run_moving_frame(cfg, observer);

    const double dt_max = model_max_dt(cfg);
    const double dt = effective_dt(cfg);
    if (dt > dt_max) {
        std::ostringstream msg;
        msg << "dt = " << dt << " exceeds the stability bound " << dt_max << " of model "
            << model_name(cfg.model) << "; refusing to start";
        throw StabilityError(msg.str(), dt, dt_max);
    }

    fs::create_directories(cfg.outdir);
    CoupledFields state = seed_fields(cfg);
    const bool coupled = cfg.model != ModelKind::AllenCahn;

    std::vector<TimeSeriesRecord> records;
    auto record = [&](long step) {
        const double time = static_cast<double>(step) * dt;
        const Field* aux = coupled ? &state.u : nullptr;
        records.push_back(measure(cfg, step, time, state.phi, aux));
        if (cfg.snapshots) {
            write_snapshot(state.phi, "phi", step, cfg.outdir);
            if (coupled)
                write_snapshot(state.u, aux_name(cfg.model), step, cfg.outdir);
        }
        if (observer)
            observer(records.back(), state.phi, aux);
    };

    record(0);
    for (long step = 1; step <= cfg.nsteps; ++step) {
        std::visit(
            [&](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, CaginalpParams>)
                    state = caginalp_step(state, p, dt, cfg.bc);
                else if constexpr (std::is_same_v<P, AllenCahnParams>)
                    state.phi = allen_cahn_step(state.phi, p, dt, cfg.bc.phi);
                else if constexpr (std::is_same_v<P, KarmaRappelParams>)
                    state = karma_rappel_step(state, p, dt, cfg.bc);
                else if constexpr (std::is_same_v<P, DissolutionParams>)
                    state = dissolution_step(state, p, dt, cfg.bc);
            },
            cfg.params);

        if (!state.phi.interior_finite() || (coupled && !state.u.interior_finite())) {
            write_timeseries_csv(records, fs::path(cfg.outdir) / "timeseries.csv");
            throw NumericalAbort("non-finite value detected at step " + std::to_string(step),
                                 step);
        }
        if (step % cfg.output_every == 0 || step == cfg.nsteps)
            record(step);
    }

    write_timeseries_csv(records, fs::path(cfg.outdir) / "timeseries.csv");
    return records;
}

}  // namespace phasefield
