#include "phasefield/config.hpp"

#include "phasefield/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

namespace phasefield {

std::string_view model_name(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Caginalp:
        return "caginalp";
    case ModelKind::AllenCahn:
        return "allen_cahn";
    case ModelKind::KarmaRappel1d:
        return "karma_rappel_1d";
    case ModelKind::MovingFrame1d:
        return "moving_frame_1d";
    case ModelKind::Dissolution:
        return "dissolution";
    }
    return "unknown";
}

PhaseConvention model_convention(ModelKind kind)
{
    return kind == ModelKind::AllenCahn ? PhaseConvention::UnitInterval
                                        : PhaseConvention::SolidMinusOne;
}

double model_max_dt(const RunConfig& cfg)
{
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CaginalpParams>)
                return caginalp_max_dt(cfg.grid);
            else if constexpr (std::is_same_v<P, AllenCahnParams>)
                return allen_cahn_max_dt(p, cfg.grid);
            else if constexpr (std::is_same_v<P, KarmaRappelParams>)
                return karma_rappel_max_dt(p, cfg.grid);
            else if constexpr (std::is_same_v<P, MovingFrameParams>)
                return karma_rappel_max_dt(p.base, cfg.grid);
            else
                return dissolution_max_dt(p, cfg.grid);
        },
        cfg.params);
}

double effective_dt(const RunConfig& cfg)
{
    return cfg.dt ? *cfg.dt : 0.5 * model_max_dt(cfg);
}

void RunConfig::validate() const
{
    grid.validate();
    std::visit([](const auto& p) { p.validate(); }, params);

    const bool one_d = model == ModelKind::KarmaRappel1d || model == ModelKind::MovingFrame1d;
    if (one_d && !grid.is_1d())
        throw ConfigError(std::string(model_name(model)) + " needs grid.ny = 1", "grid.ny");
    if (model == ModelKind::Dissolution && grid.is_1d())
        throw ConfigError("dissolution needs a 2D grid (grid.ny >= 3)", "grid.ny");
    if (nsteps < 1)
        throw ConfigError("nsteps must be >= 1", "nsteps");
    if (output_every < 1 || output_every > nsteps)
        throw ConfigError("output_every must lie in [1, nsteps]", "output_every");
    if (dt && !(*dt > 0.0))
        throw ConfigError("dt must be positive (or auto)", "dt");
    if (!(relax_tol > 0.0))
        throw ConfigError("relax.tol must be positive", "relax.tol");
    if (model != ModelKind::MovingFrame1d) {
        if (seed.kind == SeedKind::Disk && !(seed.disk.radius > 0.0))
            throw ConfigError("seed.radius must be positive", "seed.radius");
        if (seed.kind == SeedKind::Disk && !(seed.disk.smooth_width >= 0.0))
            throw ConfigError("seed.width must be non-negative", "seed.width");
        if (seed.kind == SeedKind::Front1d && !(seed.front.width >= 0.0))
            throw ConfigError("seed.width must be non-negative", "seed.width");
    }
}

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

class Reader {
public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    const Entry& entry(const std::string& key)
    {
        used_.insert(key);
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw ConfigError("missing required key '" + key + "'", key);
        return it->second;
    }

    std::string text(const std::string& key) { return entry(key).value; }

    std::string text(const std::string& key, const std::string& fallback)
    {
        return has(key) ? text(key) : fallback;
    }

    double real(const std::string& key)
    {
        const Entry& e = entry(key);
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(e.value.c_str(), &end);
        if (end == e.value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
            throw ConfigError("key '" + key + "' expects a real number, got '" + e.value + "'",
                              key, e.line);
        return v;
    }

    double real(const std::string& key, double fallback) { return has(key) ? real(key) : fallback; }

    long integer(const std::string& key)
    {
        const Entry& e = entry(key);
        errno = 0;
        char* end = nullptr;
        const long v = std::strtol(e.value.c_str(), &end, 10);
        if (end == e.value.c_str() || *end != '\0' || errno == ERANGE)
            throw ConfigError("key '" + key + "' expects an integer, got '" + e.value + "'", key,
                              e.line);
        return v;
    }

    long integer(const std::string& key, long fallback) { return has(key) ? integer(key) : fallback; }

    bool boolean(const std::string& key, bool fallback)
    {
        if (!has(key))
            return fallback;
        const Entry& e = entry(key);
        if (e.value == "true" || e.value == "1")
            return true;
        if (e.value == "false" || e.value == "0")
            return false;
        throw ConfigError("key '" + key + "' expects true or false, got '" + e.value + "'", key,
                          e.line);
    }

    /// Throws on the first key that was present but never consumed.
    void reject_unused() const
    {
        for (const auto& [key, e] : entries_)
            if (used_.count(key) == 0)
                throw ConfigError("unknown key '" + key + "' (line " + std::to_string(e.line) + ")",
                                  key, e.line);
    }

private:
    std::map<std::string, Entry> entries_;
    std::set<std::string> used_;
};

ModelKind parse_model(Reader& r)
{
    const Entry& e = r.entry("model");
    for (ModelKind k : {ModelKind::Caginalp, ModelKind::AllenCahn, ModelKind::KarmaRappel1d,
                        ModelKind::MovingFrame1d, ModelKind::Dissolution})
        if (e.value == model_name(k))
            return k;
    throw ConfigError("unknown model '" + e.value + "'", "model", e.line);
}

BoundaryCondition parse_bc(Reader& r, const std::string& prefix, const BoundaryCondition& fallback)
{
    BoundaryCondition bc = fallback;
    const std::string kind_key = prefix + ".kind";
    if (r.has(kind_key)) {
        const Entry& e = r.entry(kind_key);
        if (e.value == "zero_flux")
            bc.kind = BoundaryKind::ZeroFluxNeumann;
        else if (e.value == "periodic")
            bc.kind = BoundaryKind::Periodic;
        else if (e.value == "dirichlet")
            bc.kind = BoundaryKind::Dirichlet;
        else
            throw ConfigError("unknown boundary kind '" + e.value + "'", kind_key, e.line);
    }
    bc.dirichlet_value = r.real(prefix + ".value", bc.dirichlet_value);
    return bc;
}

KarmaRappelParams parse_karma(Reader& r)
{
    KarmaRappelParams p;
    p.tau = r.real("params.tau");
    p.width = r.real("params.width");
    p.lambda = r.real("params.lambda");
    p.diffusivity = r.real("params.diffusivity");
    return p;
}

ModelParams parse_params(Reader& r, ModelKind model)
{
    switch (model) {
    case ModelKind::Caginalp: {
        CaginalpParams p;
        p.latent_heat = r.real("params.latent_heat");
        return p;
    }
    case ModelKind::AllenCahn: {
        AllenCahnParams p;
        p.mobility = r.real("params.mobility");
        p.beta = r.real("params.beta");
        p.g_const = r.real("params.g_const", 1.0);
        return p;
    }
    case ModelKind::KarmaRappel1d:
        return parse_karma(r);
    case ModelKind::MovingFrame1d: {
        MovingFrameParams p;
        p.base = parse_karma(r);
        p.velocity = r.real("params.velocity");
        p.u_far = r.real("params.u_far");
        return p;
    }
    case ModelKind::Dissolution: {
        DissolutionParams p;
        p.peclet = r.real("params.peclet");
        p.lambda = r.real("params.lambda");
        p.alpha = r.real("params.alpha");
        p.damkohler = r.real("params.damkohler");
        p.eps_grad = r.real("params.eps_grad", kDefaultEpsGrad);
        return p;
    }
    }
    throw ConfigError("unsupported model", "model");
}

SeedSpec parse_seed(Reader& r, const GridSpec& grid, PhaseConvention convention)
{
    const double low = convention == PhaseConvention::UnitInterval ? 0.0 : -1.0;
    const double high = 1.0;
    SeedSpec s;
    const Entry& kind = r.entry("seed.kind");
    if (kind.value == "disk") {
        s.kind = SeedKind::Disk;
        s.disk.cx = r.real("seed.cx", 0.5 * grid.length_x());
        s.disk.cy = r.real("seed.cy", grid.is_1d() ? 0.5 * grid.dy : 0.5 * grid.length_y());
        s.disk.radius = r.real("seed.radius");
        s.disk.smooth_width = r.real("seed.width", 0.0);
        s.disk.inside = r.real("seed.inside", low);
        s.disk.outside = r.real("seed.outside", high);
        s.aux_inside = r.real("seed.aux_inside", 0.0);
        s.aux_outside = r.real("seed.aux_outside", 0.0);
    } else if (kind.value == "front_1d") {
        s.kind = SeedKind::Front1d;
        s.front.x0 = r.real("seed.x0");
        s.front.width = r.real("seed.width", 0.0);
        s.front.left = r.real("seed.left", low);
        s.front.right = r.real("seed.right", high);
        s.aux_left = r.real("seed.aux_left", 0.0);
        s.aux_right = r.real("seed.aux_right", 0.0);
    } else {
        throw ConfigError("unknown seed kind '" + kind.value + "'", "seed.kind", kind.line);
    }
    return s;
}

}  // namespace

RunConfig parse_config(std::string_view text)
{
    std::map<std::string, Entry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {},
                              line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value", key,
                              line_no);
        if (entries.count(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                              key, line_no);
        entries.emplace(key, Entry{value, line_no});
    }

    Reader r(std::move(entries));
    RunConfig cfg;
    cfg.model = parse_model(r);

    cfg.grid.nx = static_cast<int>(r.integer("grid.nx"));
    cfg.grid.ny = static_cast<int>(r.integer("grid.ny"));
    cfg.grid.dx = r.real("grid.dx");
    cfg.grid.dy = r.real("grid.dy", cfg.grid.dx);
    cfg.grid.validate();

    const BoundaryCondition main_bc = parse_bc(r, "bc", BoundaryCondition::zero_flux());
    cfg.bc = Boundaries(main_bc, parse_bc(r, "bc.aux", main_bc));

    cfg.params = parse_params(r, cfg.model);

    if (cfg.model != ModelKind::MovingFrame1d && r.has("dt")) {
        const std::string dt = r.text("dt");
        if (dt != "auto")
            cfg.dt = r.real("dt");
    }
    cfg.nsteps = r.integer("nsteps");
    cfg.output_every = r.integer("output_every", cfg.nsteps);
    cfg.outdir = r.text("outdir", "output");
    cfg.snapshots = r.boolean("snapshots", true);

    if (cfg.model == ModelKind::MovingFrame1d)
        cfg.relax_tol = r.real("relax.tol", cfg.relax_tol);
    else
        cfg.seed = parse_seed(r, cfg.grid, model_convention(cfg.model));

    r.reject_unused();
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace phasefield
