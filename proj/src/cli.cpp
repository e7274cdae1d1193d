#include "phasefield/cli.hpp"

#include "phasefield/analysis.hpp"
#include "phasefield/config.hpp"
#include "phasefield/driver.hpp"
#include "phasefield/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace phasefield {

namespace {

int cmd_run(const std::string& config_path, std::ostream& out)
{
    const RunConfig cfg = load_config(config_path);
    const std::vector<TimeSeriesRecord> records = run_simulation(cfg);
    const TimeSeriesRecord& last = records.back();
    out << "model " << model_name(cfg.model) << ": " << records.size() << " records written to "
        << cfg.outdir << "\n"
        << "final step " << last.step << " volume " << format_real(last.volume) << "\n";
    return kExitOk;
}

int cmd_fit(const std::string& csv_path, double fraction, std::ostream& out, std::ostream& err)
{
    const std::vector<TimeSeriesRecord> records = read_timeseries_csv(csv_path);
    std::vector<double> times;
    std::vector<double> positions;
    for (const TimeSeriesRecord& r : records) {
        if (r.interface_pos) {
            times.push_back(r.time);
            positions.push_back(*r.interface_pos);
        }
    }
    const SqrtFit fit = fit_sqrt_growth_tail(times, positions, fraction);
    if (fit.degenerate) {
        err << "error: degenerate fit (slope of s^2 against t is " << format_real(fit.slope)
            << "); beta undefined\n";
        return kExitValidation;
    }
    out << "beta " << format_real(fit.beta) << "\n"
        << "t0 " << format_real(fit.t0) << "\n"
        << "r2 " << format_real(fit.r_squared) << "\n";
    return kExitOk;
}

int cmd_oracle_neumann(double stefan, std::ostream& out)
{
    out << "beta " << format_real(neumann_beta(stefan)) << "\n";
    return kExitOk;
}

int cmd_scan_velocity(const std::string& config_path, double vmin, double vmax, int nv,
                      std::ostream& out)
{
    const RunConfig cfg = load_config(config_path);
    if (cfg.model != ModelKind::MovingFrame1d)
        throw ConfigError("scan-velocity needs a moving_frame_1d config", "model");
    if (nv < 1)
        throw UsageError("--nv must be >= 1");
    if (nv > 1 && !(vmax > vmin))
        throw UsageError("--vmax must exceed --vmin");

    MovingFrameParams p = std::get<MovingFrameParams>(cfg.params);
    bool any = false;
    out << "velocity,residual,iterations,converged\n";
    for (int k = 0; k < nv; ++k) {
        p.velocity = nv == 1 ? vmin : vmin + (vmax - vmin) * k / (nv - 1);
        const RelaxResult res = moving_frame_relax(p, cfg.grid, cfg.relax_tol, cfg.nsteps);
        any = any || res.converged;
        out << format_real(p.velocity) << ',' << format_real(res.residual) << ','
            << res.iterations << ',' << (res.converged ? "yes" : "no") << "\n";
    }
    return any ? kExitOk : kExitNonConvergence;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Phase-field solvers for Stefan-type problems", "phasefield"};
    app.require_subcommand(1);

    std::string run_config;
    auto* run = app.add_subcommand("run", "Run a simulation from a config file");
    run->add_option("config", run_config, "Config file")->required();

    std::string fit_csv;
    double fraction = 0.5;
    auto* fit = app.add_subcommand("fit", "Fit s = beta sqrt(t - t0) to a time series");
    fit->add_option("timeseries", fit_csv, "timeseries.csv written by `run`")->required();
    fit->add_option("--fraction", fraction, "Trailing fraction of samples to fit")
        ->check(CLI::Range(0.0, 1.0));

    double stefan = 0.0;
    auto* oracle = app.add_subcommand("oracle", "Closed-form reference values");
    oracle->require_subcommand(1);
    auto* neumann = oracle->add_subcommand("neumann", "One-phase Neumann growth coefficient");
    neumann->add_option("--stefan", stefan, "Stefan number")->required();

    std::string scan_config;
    double vmin = 0.0;
    double vmax = 0.0;
    int nv = 0;
    auto* scan = app.add_subcommand("scan-velocity", "Relax the moving-frame system over a V grid");
    scan->add_option("config", scan_config, "moving_frame_1d config file")->required();
    scan->add_option("--vmin", vmin, "Smallest velocity")->required();
    scan->add_option("--vmax", vmax, "Largest velocity")->required();
    scan->add_option("--nv", nv, "Number of velocities")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (run->parsed())
            return cmd_run(run_config, out);
        if (fit->parsed())
            return cmd_fit(fit_csv, fraction, out, err);
        if (neumann->parsed())
            return cmd_oracle_neumann(stefan, out);
        if (scan->parsed())
            return cmd_scan_velocity(scan_config, vmin, vmax, nv, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const StabilityError& e) {
        err << "aborted: " << e.what() << "\n";
        return kExitRuntimeAbort;
    } catch (const NumericalAbort& e) {
        err << "aborted: " << e.what() << "\n";
        return kExitRuntimeAbort;
    } catch (const NonConvergence& e) {
        err << "not converged: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "aborted: " << e.what() << "\n";
        return kExitRuntimeAbort;
    }
    return kExitValidation;
}

}  // namespace phasefield
