#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "switchosc/classical.hpp"
#include "switchosc/oracle.hpp"
#include "switchosc/profile.hpp"
#include "switchosc/quantum.hpp"
#include "switchosc/wigner.hpp"

#ifdef SWITCHOSC_HAVE_CLI
#include "switchosc/cli/commands.hpp"
#include "switchosc/cli/config.hpp"
#endif

using namespace switchosc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kMinusTwoI{0.0, -2.0};
const OscParams kFigure{.m = 1.0, .hbar = 1.0, .alpha = 0.5, .omega = 1.0};
const SmusState kState{{1.0, 0.2}};
constexpr double kT0 = -5.0;
constexpr double kT1 = 10.0;

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<double> sample_points(std::size_t n = 1000) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = kT0 + (kT1 - kT0) * static_cast<double>(i) / (n - 1.0);
    return t;
}

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double rel_stddev(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double s = 0.0;
    for (const double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / n) / std::abs(mean);
}

double ode_error(const oracle::Trajectory& tr, Transcription variant) {
    double err = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i)
        err = std::max(err, std::abs(tr.states[i].eps - epsilon(tr.times[i], kFigure, variant).eps));
    return err;
}

Outcome oracle_equivalence() {
    const auto stops = sample_points();
    const auto init = epsilon(kT0, kFigure);
    const auto start = std::chrono::steady_clock::now();
    const auto tr = oracle::integrate_ode(kFigure, kT0, kT1, {init.eps, init.eps_dot}, 1e-11, {.stops = stops});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double err = ode_error(tr, Transcription::Derived);
    const double err_printed = ode_error(tr, Transcription::PrintedPhase);
    bool reported = true;
#ifdef SWITCHOSC_HAVE_CLI
    const auto report = cli::cmd_validate(cli::resolve("validate", {}));
    const auto& ev = report.checks.front().evidence;
    reported = report.checks.front().name == "after_switch_phase" &&
               ev.at("ode_max_error_computed").get<double>() < 1e-8 &&
               ev.at("ode_max_error_printed").get<double>() > 1e-1;
#endif
    return {err < 1e-8 && err_printed > 1e-1 && secs < 5.0 && reported,
            fmt("max|deps|=%.3e", err) + fmt(" printed-phase=%.3e", err_printed) + fmt(" runtime=%.2es", secs) +
                (reported ? " validate-reports-both" : " validate-missing")};
}

Outcome wronskian_conservation() {
    double worst = 0.0;
    for (const double t : sample_points()) worst = std::max(worst, std::abs(wronskian(epsilon(t, kFigure)) - kMinusTwoI));
    return {worst < 1e-10, fmt("max|W+2i|=%.3e", worst)};
}

Outcome junction_continuity() {
    const double end = switch_end(kFigure);
    const auto jump = [](const ClassicalAmplitude& a, const ClassicalAmplitude& b) {
        return std::max(std::abs(a.eps - b.eps), std::abs(a.eps_dot - b.eps_dot));
    };
    const double j0 = jump(epsilon_on_branch(Region::Before, 0.0, kFigure),
                           epsilon_on_branch(Region::Switching, 0.0, kFigure));
    const double j1 = jump(epsilon_on_branch(Region::Switching, end, kFigure),
                           epsilon_on_branch(Region::After, end, kFigure));
    return {std::max(j0, j1) < 1e-10, fmt("jump(0)=%.3e", j0) + fmt(" jump(pi/2w)=%.3e", j1)};
}

Outcome determinant_identity() {
    double worst = 0.0;
    const double pure = 0.25 * kFigure.hbar * kFigure.hbar;
    for (const double t : sample_points()) worst = std::max(worst, std::abs(second_moments(t, kFigure).det() - pure));
    return {worst < 1e-10, fmt("max|det-hbar^2/4|=%.3e", worst)};
}

Outcome commutator_identity() {
    double worst = 0.0;
    for (const double t : sample_points())
        worst = std::max(worst, std::abs(invariant_coefficients(t, kFigure).commutator() - 1.0));
    return {worst < 1e-12, fmt("max||u|^2-|v|^2-1|=%.3e", worst)};
}

Outcome conserved_pair_constancy() {
    std::vector<double> q0, p0;
    for (const double t : sample_points()) {
        const auto c = conserved_pair(kState, t, kFigure);
        q0.push_back(c.q0);
        p0.push_back(c.p0);
    }
    const double sq = rel_stddev(q0), sp = rel_stddev(p0);
    return {sq < 1e-9 && sp < 1e-9, fmt("rel-stddev Q0=%.3e", sq) + fmt(" P0=%.3e", sp)};
}

Outcome ideal_squeezing_at_zero() {
    const auto c = second_moments(0.0, kFigure);
    const double d = std::max({std::abs(c.cqp), std::abs(c.sq2 - 0.75), std::abs(c.sp2 - 1.0 / 3.0)});
    return {d < 1e-12, fmt("sq2=%.15g", c.sq2) + fmt(" sp2=%.15g", c.sp2) + fmt(" cqp=%.3e", c.cqp)};
}

Outcome ellipse_closure() {
    const auto gap = [](Region r, double t, double w) {
        const auto a = first_moments(kState, epsilon_on_branch(r, t, kFigure), kFigure);
        const auto b = first_moments(kState, epsilon_on_branch(r, t + 2.0 * kPi / w, kFigure), kFigure);
        return std::hypot(a.q_mean - b.q_mean, a.p_mean - b.p_mean);
    };
    const double before = gap(Region::Before, -10.0, omega_before(kFigure));
    const double after = gap(Region::After, switch_end(kFigure), omega_after(kFigure));
    return {std::max(before, after) < 1e-6, fmt("before=%.3e", before) + fmt(" after=%.3e", after)};
}

Outcome wigner_normalisation() {
    double worst_norm = 0.0, worst_moment = 0.0, worst_peak = 0.0;
    for (const double t : {0.0, 1.0, 4.0}) {
        const auto g = wigner_grid(t, kState, kFigure, 6.0, 6.0, 256, 256);
        worst_norm = std::max(worst_norm, std::abs(grid_integral(g) - 1.0));
        const auto [fm, cov] = grid_moments(g);
        const auto efm = first_moments(kState, t, kFigure);
        const auto ecov = second_moments(t, kFigure);
        const double cscale = std::sqrt(ecov.sq2 * ecov.sp2);
        worst_moment = std::max({worst_moment, std::abs(fm.q_mean - efm.q_mean) / std::abs(efm.q_mean),
                                 std::abs(fm.p_mean - efm.p_mean) / std::abs(efm.p_mean),
                                 std::abs(cov.sq2 - ecov.sq2) / ecov.sq2, std::abs(cov.sp2 - ecov.sp2) / ecov.sp2,
                                 std::abs(cov.cqp - ecov.cqp) / cscale});
        worst_peak = std::max(worst_peak, std::abs(wigner_value(efm.q_mean, efm.p_mean, efm, ecov, kFigure.hbar) -
                                                   1.0 / (kPi * kFigure.hbar)));
    }
    return {worst_norm < 1e-6 && worst_moment < 1e-4 && worst_peak < 1e-9,
            fmt("|norm-1|=%.3e", worst_norm) + fmt(" moment-rel=%.3e", worst_moment) +
                fmt(" |peak-1/(pi hbar)|=%.3e", worst_peak)};
}

Outcome coherence_scan_check() {
    const double end = switch_end(kFigure);
    const double w3 = omega_after(kFigure);
    const auto scan = coherence_scan(kFigure, end, end + 3.0 * kPi / w3);
    const double spacing = kPi / (2.0 * kFigure.omega * std::sqrt(1.0 - kFigure.alpha * kFigure.omega));
    double dev = 0.0, det = 0.0;
    std::string ratios, printed;
    for (std::size_t i = 0; i < scan.events.size(); ++i) {
        const auto& e = scan.events[i];
        if (i > 0) dev = std::max(dev, std::abs(e.t - scan.events[i - 1].t - spacing));
        det = std::max(det, e.det_residual);
        ratios += fmt(" %.4f", e.sq_ratio) + fmt("/%.4f", e.sp_ratio);
        printed += fmt(" %.4f", e.t) + fmt("(eq29 %.4f)", e.printed_t);
    }
    return {scan.events.size() >= 2 && dev < 1e-9 && det < 1e-10,
            std::to_string(scan.events.size()) + " events" + fmt(" spacing-dev=%.3e", dev) +
                fmt(" det=%.3e", det) + " sq/sp ratios:" + ratios + " times:" + printed};
}

Outcome stationary_limit() {
    const OscParams p{.m = 2.0, .hbar = 0.7, .alpha = 0.0, .omega = 1.3};
    const double sq = p.hbar / (2.0 * p.m * p.omega), sp = p.hbar * p.m * p.omega / 2.0;
    double worst = 0.0;
    for (const double t : sample_points()) {
        const auto c = second_moments(t, p);
        worst = std::max({worst, std::abs(c.sq2 - sq), std::abs(c.sp2 - sp), std::abs(c.cqp),
                          std::abs(omega_of(t, p) - p.omega)});
    }
    return {worst < 1e-12, fmt("max deviation=%.3e", worst)};
}

Outcome determinism() {
#ifdef SWITCHOSC_HAVE_CLI
    std::size_t n = 0;
    for (const auto& cmd : cli::command_names()) {
        for (const char* format : {"csv", "json"}) {
            cli::ConfigOverrides o;
            o.format = std::string(format) == "json" ? cli::OutputFormat::Json : cli::OutputFormat::Csv;
            const auto cfg = cli::resolve(cmd, o);
            std::ostringstream a, b, console;
            cli::run(cfg, a, console);
            cli::run(cfg, b, console);
            if (a.str() != b.str() || a.str().empty()) return {false, cmd + " (" + format + ") differs"};
            ++n;
        }
    }
    return {true, std::to_string(n) + " command/format pairs byte-identical"};
#else
    return {false, "command-line library not built"};
#endif
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"oracle_equivalence", oracle_equivalence},
        {"wronskian_conservation", wronskian_conservation},
        {"junction_continuity", junction_continuity},
        {"determinant_identity", determinant_identity},
        {"commutator_identity", commutator_identity},
        {"conserved_pair", conserved_pair_constancy},
        {"ideal_squeezing_at_t0", ideal_squeezing_at_zero},
        {"ellipse_closure", ellipse_closure},
        {"wigner_normalisation", wigner_normalisation},
        {"coherence_scan", coherence_scan_check},
        {"stationary_limit", stationary_limit},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        if (!r.pass) ++failures;
        std::printf("%s %2zu %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
