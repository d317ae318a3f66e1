#include "switchosc/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "switchosc/errors.hpp"
#include "switchosc/format.hpp"

namespace switchosc::cli {
namespace {

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    return x;
}

std::size_t parse_count(const std::string& key, const std::string& v) {
    std::size_t x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
    return x;
}

OutputFormat parse_format(const std::string& v) {
    if (v == "csv") return OutputFormat::Csv;
    if (v == "json") return OutputFormat::Json;
    throw ConfigError("config: format must be csv or json, got '" + v + "'");
}

bool is_command(const std::string& c) {
    static const char* names[] = {"profile", "epsilon", "phase-diagram", "moments",
                                  "wigner",  "coherence", "validate"};
    return std::find(std::begin(names), std::end(names), c) != std::end(names);
}

}  // namespace

void ConfigOverrides::merge(const ConfigOverrides& o) {
    take(alpha, o.alpha);
    take(omega, o.omega);
    take(mass, o.mass);
    take(hbar, o.hbar);
    take(z_re, o.z_re);
    take(z_im, o.z_im);
    take(t0, o.t0);
    take(t1, o.t1);
    take(samples, o.samples);
    take(format, o.format);
    take(out, o.out);
    take(time, o.time);
    take(n_sigma, o.n_sigma);
    take(grid, o.grid);
}

ConfigOverrides parse_config(std::istream& is) {
    ConfigOverrides c;
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "alpha") c.alpha = parse_double(key, val);
        else if (key == "omega") c.omega = parse_double(key, val);
        else if (key == "mass") c.mass = parse_double(key, val);
        else if (key == "hbar") c.hbar = parse_double(key, val);
        else if (key == "z-re") c.z_re = parse_double(key, val);
        else if (key == "z-im") c.z_im = parse_double(key, val);
        else if (key == "t0") c.t0 = parse_double(key, val);
        else if (key == "t1") c.t1 = parse_double(key, val);
        else if (key == "samples") c.samples = parse_count(key, val);
        else if (key == "format") c.format = parse_format(val);
        else if (key == "out") c.out = val;
        else if (key == "time") c.time = parse_double(key, val);
        else if (key == "n-sigma") c.n_sigma = parse_double(key, val);
        else if (key == "grid") c.grid = parse_count(key, val);
        else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return c;
}

ConfigOverrides load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

RunConfig resolve(const std::string& command, const ConfigOverrides& g) {
    if (!is_command(command)) throw ConfigError("unknown command '" + command + "'");
    RunConfig cfg;
    cfg.command = command;
    cfg.params.alpha = g.alpha.value_or(cfg.params.alpha);
    cfg.params.omega = g.omega.value_or(cfg.params.omega);
    cfg.params.m = g.mass.value_or(cfg.params.m);
    cfg.params.hbar = g.hbar.value_or(cfg.params.hbar);
    try {
        validate_params(cfg.params);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    cfg.z = {g.z_re.value_or(cfg.z.real()), g.z_im.value_or(cfg.z.imag())};
    if (!std::isfinite(cfg.z.real()) || !std::isfinite(cfg.z.imag()))
        throw ConfigError("z must be finite");

    if (command == "coherence") {
        // Six envelope extrema after the switch.
        const double end = switch_end(cfg.params);
        cfg.t0 = end;
        cfg.t1 = end + 3.0 * std::numbers::pi / omega_after(cfg.params);
    }
    cfg.t0 = g.t0.value_or(cfg.t0);
    cfg.t1 = g.t1.value_or(cfg.t1);
    cfg.samples = g.samples.value_or(cfg.samples);
    cfg.format = g.format.value_or(cfg.format);
    cfg.out = g.out.value_or(cfg.out);
    cfg.time = g.time.value_or(cfg.time);
    cfg.n_sigma = g.n_sigma.value_or(cfg.n_sigma);
    cfg.grid = g.grid.value_or(cfg.grid);

    if (!std::isfinite(cfg.t0) || !std::isfinite(cfg.t1) || !(cfg.t0 < cfg.t1))
        throw ConfigError("time range must satisfy t0 < t1 (got t0=" + format_number(cfg.t0) +
                          ", t1=" + format_number(cfg.t1) + ")");
    if (cfg.samples < 2) throw ConfigError("samples must be at least 2");
    if (command == "coherence" && cfg.t0 < switch_end(cfg.params))
        throw ConfigError("coherence: t0 must be >= pi/(2 omega) = " +
                          format_number(switch_end(cfg.params)));
    if (command == "wigner") {
        if (cfg.grid < 16) throw ConfigError("wigner: grid must be at least 16");
        if (!(cfg.n_sigma >= 3.0)) throw ConfigError("wigner: n-sigma must be at least 3");
        if (!std::isfinite(cfg.time)) throw ConfigError("wigner: time must be finite");
    }
    return cfg;
}

std::vector<double> sample_times(const RunConfig& cfg) {
    std::vector<double> ts(cfg.samples);
    const double n = static_cast<double>(cfg.samples - 1);
    for (std::size_t i = 0; i < cfg.samples; ++i)
        ts[i] = cfg.t0 + (cfg.t1 - cfg.t0) * static_cast<double>(i) / n;
    ts.back() = cfg.t1;
    for (const double j : {0.0, switch_end(cfg.params)})
        if (j > cfg.t0 && j < cfg.t1 && std::find(ts.begin(), ts.end(), j) == ts.end())
            ts.insert(std::upper_bound(ts.begin(), ts.end(), j), j);
    return ts;
}

std::string to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

std::vector<std::string> describe(const RunConfig& cfg) {
    const auto& p = cfg.params;
    std::vector<std::string> lines{
        "switchosc " + cfg.command,
        "mass=" + format_number(p.m) + " hbar=" + format_number(p.hbar) +
            " alpha=" + format_number(p.alpha) + " omega=" + format_number(p.omega),
        "z-re=" + format_number(cfg.z.real()) + " z-im=" + format_number(cfg.z.imag()),
        "t0=" + format_number(cfg.t0) + " t1=" + format_number(cfg.t1) +
            " samples=" + std::to_string(cfg.samples),
    };
    if (cfg.command == "wigner")
        lines.push_back("time=" + format_number(cfg.time) + " n-sigma=" + format_number(cfg.n_sigma) +
                        " grid=" + std::to_string(cfg.grid));
    return lines;
}

}  // namespace switchosc::cli
