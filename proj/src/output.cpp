#include "phasefield/output.hpp"

#include "phasefield/errors.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace phasefield {

namespace fs = std::filesystem;

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string optional_cell(const std::optional<double>& v)
{
    return v ? format_real(*v) : std::string{};
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
    out << content;
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed: " + std::strerror(errno));
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

double parse_real(const std::string& s, const fs::path& path, int line)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0')
        throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

std::optional<double> parse_optional(const std::string& s, const fs::path& path, int line)
{
    if (s.empty())
        return std::nullopt;
    return parse_real(s, path, line);
}

std::vector<std::string> read_lines(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

}  // namespace

void write_timeseries_csv(std::span<const TimeSeriesRecord> records, const fs::path& path)
{
    if (records.empty())
        throw UsageError("write_timeseries_csv: no records to write");
    std::string out = kTimeSeriesHeader;
    out += '\n';
    for (const TimeSeriesRecord& r : records) {
        out += std::to_string(r.step);
        out += ',';
        out += format_real(r.time);
        out += ',';
        out += format_real(r.volume);
        out += ',';
        out += optional_cell(r.interface_pos);
        out += ',';
        out += optional_cell(r.interface_width);
        out += ',';
        out += optional_cell(r.enthalpy);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<TimeSeriesRecord> read_timeseries_csv(const fs::path& path)
{
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || lines.front() != kTimeSeriesHeader)
        throw IoError("'" + path.string() + "' is not a time-series CSV (bad header)");
    std::vector<TimeSeriesRecord> records;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int line = static_cast<int>(k + 1);
        const std::vector<std::string> c = split_csv(lines[k]);
        if (c.size() != 6)
            throw IoError(path.string() + ":" + std::to_string(line) + ": expected 6 columns");
        TimeSeriesRecord r;
        r.step = static_cast<long>(parse_real(c[0], path, line));
        r.time = parse_real(c[1], path, line);
        r.volume = parse_real(c[2], path, line);
        r.interface_pos = parse_optional(c[3], path, line);
        r.interface_width = parse_optional(c[4], path, line);
        r.enthalpy = parse_optional(c[5], path, line);
        records.push_back(r);
    }
    return records;
}

fs::path write_snapshot(const Field& field, const std::string& name, long step,
                        const fs::path& outdir)
{
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, "_%06ld.csv", step);
    const fs::path path = outdir / (name + suffix);

    std::string out = "x,y,value\n";
    for (int j = 1; j <= field.ny(); ++j) {
        for (int i = 1; i <= field.nx(); ++i) {
            out += format_real(field.x(i));
            out += ',';
            out += format_real(field.y(j));
            out += ',';
            out += format_real(field(i, j));
            out += '\n';
        }
    }
    write_file(path, out);
    return path;
}

std::vector<SnapshotRow> read_snapshot(const fs::path& path)
{
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || lines.front() != "x,y,value")
        throw IoError("'" + path.string() + "' is not a snapshot CSV (bad header)");
    std::vector<SnapshotRow> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int line = static_cast<int>(k + 1);
        const std::vector<std::string> c = split_csv(lines[k]);
        if (c.size() != 3)
            throw IoError(path.string() + ":" + std::to_string(line) + ": expected 3 columns");
        rows.push_back({parse_real(c[0], path, line), parse_real(c[1], path, line),
                        parse_real(c[2], path, line)});
    }
    return rows;
}

}  // namespace phasefield
