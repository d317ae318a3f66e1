#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchosc/classical.hpp"
#include "switchosc/profile.hpp"

namespace switchosc::cli {

/// Invalid command line or config file. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Values given on the command line or in a config file. Unset fields fall
/// through to the next source: flags, then config file, then defaults.
struct ConfigOverrides {
    std::optional<double> alpha, omega, mass, hbar;
    std::optional<double> z_re, z_im;
    std::optional<double> t0, t1;
    std::optional<std::size_t> samples;
    std::optional<OutputFormat> format;
    std::optional<std::string> out;
    std::optional<double> time;       // wigner snapshot time
    std::optional<double> n_sigma;    // wigner half width in standard deviations
    std::optional<std::size_t> grid;  // wigner points per axis

    /// Fields set in `over` replace fields here.
    void merge(const ConfigOverrides& over);
};

/// Parses "key = value" lines; '#' starts a comment. Keys use the long
/// flag names without dashes, e.g. "alpha", "z-re", "samples".
ConfigOverrides parse_config(std::istream& is);
ConfigOverrides load_config_file(const std::string& path);

struct RunConfig {
    std::string command;
    OscParams params;
    Complex z{1.0, 0.2};
    double t0 = -5.0;
    double t1 = 10.0;
    std::size_t samples = 301;
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty: stdout
    double time = 0.0;
    double n_sigma = 6.0;
    std::size_t grid = 128;
};

/// Fills in defaults for `command` (the figure parameters m = hbar = 1,
/// alpha = 0.5, omega = 1, z = 1 + 0.2i) and checks every invariant.
/// Throws ConfigError.
RunConfig resolve(const std::string& command, const ConfigOverrides& given);

/// n uniformly spaced times on [t0, t1] including both ends, plus the
/// junctions 0 and pi/(2 omega) when they fall strictly inside.
std::vector<double> sample_times(const RunConfig& cfg);

/// Header lines describing cfg, without the leading '#'.
std::vector<std::string> describe(const RunConfig& cfg);

std::string to_string(OutputFormat f);

}  // namespace switchosc::cli
