#pragma once

#include "phasefield/grid.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace phasefield {

/// Diagnostics recorded at one step. Absent values are written as empty cells.
struct TimeSeriesRecord {
    long step = 0;
    double time = 0.0;
    double volume = 0.0;
    std::optional<double> interface_pos;    // front position (1D) or mean radius (disk)
    std::optional<double> interface_width;  // 10-90% width
    std::optional<double> enthalpy;         // Caginalp runs only
};

inline constexpr const char* kTimeSeriesHeader =
    "step,time,volume,interface_pos,interface_width,enthalpy";

/// Renders a real with 12 significant digits ("%.12g").
std::string format_real(double v);

/// Header plus one LF-terminated row per record. Throws UsageError on an
/// empty sequence and IoError (path and cause) on write failure.
void write_timeseries_csv(std::span<const TimeSeriesRecord> records,
                          const std::filesystem::path& path);

/// Inverse of write_timeseries_csv.
std::vector<TimeSeriesRecord> read_timeseries_csv(const std::filesystem::path& path);

/// `<outdir>/<name>_<step:06>.csv` with header `x,y,value` and one row per
/// interior cell (x fastest). Returns the path written.
std::filesystem::path write_snapshot(const Field& field, const std::string& name, long step,
                                     const std::filesystem::path& outdir);

struct SnapshotRow {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

std::vector<SnapshotRow> read_snapshot(const std::filesystem::path& path);

}  // namespace phasefield
