#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "switchosc/cli/commands.hpp"
#include "switchosc/cli/config.hpp"
#include "switchosc/errors.hpp"

namespace {

using namespace switchosc::cli;

struct FlagValues {
    double alpha = 0, omega = 0, mass = 0, hbar = 0, z_re = 0, z_im = 0, t0 = 0, t1 = 0;
    double time = 0, n_sigma = 0;
    std::size_t samples = 0, grid = 0;
    std::string format, out, config;
    std::map<std::string, CLI::Option*> opts;

    template <typename T>
    void set_if(std::optional<T>& dst, const char* flag, const T& v) const {
        if (opts.at(flag)->count() > 0) dst = v;
    }

    ConfigOverrides overrides() const {
        ConfigOverrides o;
        set_if(o.alpha, "--alpha", alpha);
        set_if(o.omega, "--omega", omega);
        set_if(o.mass, "--mass", mass);
        set_if(o.hbar, "--hbar", hbar);
        set_if(o.z_re, "--z-re", z_re);
        set_if(o.z_im, "--z-im", z_im);
        set_if(o.t0, "--t0", t0);
        set_if(o.t1, "--t1", t1);
        set_if(o.samples, "--samples", samples);
        set_if(o.out, "--out", out);
        if (opts.count("--time")) {
            set_if(o.time, "--time", time);
            set_if(o.n_sigma, "--n-sigma", n_sigma);
            set_if(o.grid, "--grid", grid);
        }
        if (opts.at("--format")->count() > 0)
            o.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        return o;
    }
};

void add_flags(CLI::App* sub, FlagValues& v, bool wigner) {
    auto add = [&](const char* name, auto& target, const char* help) {
        v.opts[name] = sub->add_option(name, target, help);
    };
    add("--alpha", v.alpha, "switching strength alpha (alpha*omega < 1)");
    add("--omega", v.omega, "base frequency omega > 0");
    add("--mass", v.mass, "mass m > 0");
    add("--hbar", v.hbar, "reduced Planck constant > 0");
    add("--z-re", v.z_re, "real part of the initial SMUS label z");
    add("--z-im", v.z_im, "imaginary part of the initial SMUS label z");
    add("--t0", v.t0, "start of the time range");
    add("--t1", v.t1, "end of the time range");
    add("--samples", v.samples, "number of uniformly spaced samples");
    v.opts["--format"] =
        sub->add_option("--format", v.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    add("--out", v.out, "output file (default stdout)");
    v.opts["--config"] = sub->add_option("--config", v.config, "key=value config file")
                             ->check(CLI::ExistingFile);
    if (wigner) {
        add("--time", v.time, "snapshot time");
        add("--n-sigma", v.n_sigma, "half width of the grid in standard deviations");
        add("--grid", v.grid, "points per axis");
    }
}

const char* describe_command(const std::string& name) {
    if (name == "profile") return "tabulate the switched frequency Omega(t)";
    if (name == "epsilon") return "tabulate the classical amplitude eps(t) and its derivative";
    if (name == "phase-diagram") return "tabulate the mean position and momentum of a SMUS";
    if (name == "moments") return "tabulate the second moments and the uncertainty determinant";
    if (name == "wigner") return "sample the Wigner function on a grid";
    if (name == "coherence") return "locate the zeros of c_qp after the switch";
    return "compare printed constants against independent oracles";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum harmonic oscillator with a switched frequency"};
    app.require_subcommand(1);
    std::map<std::string, std::unique_ptr<FlagValues>> flags;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name, describe_command(name));
        auto& v = flags[name] = std::make_unique<FlagValues>();
        add_flags(sub, *v, name == "wigner");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const FlagValues& v = *flags.at(command);
    RunConfig cfg;
    try {
        ConfigOverrides merged;
        if (!v.config.empty()) merged = load_config_file(v.config);
        merged.merge(v.overrides());
        cfg = resolve(command, merged);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cfg.out.empty()) {
            run(cfg, std::cout, std::cerr);
        } else {
            std::ofstream os(cfg.out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot open " << cfg.out << '\n';
                return 2;
            }
            run(cfg, os, std::cout);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
