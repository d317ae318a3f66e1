#include "switchosc/cli/commands.hpp"

#include <cmath>
#include <ostream>

#include "switchosc/classical.hpp"
#include "switchosc/format.hpp"
#include "switchosc/quantum.hpp"

namespace switchosc::cli {

Table cmd_profile(const RunConfig& cfg) {
    Table t;
    t.columns = {"t", "omega"};
    for (const double time : sample_times(cfg)) t.rows.push_back({time, omega_of(time, cfg.params)});
    return t;
}

Table cmd_epsilon(const RunConfig& cfg) {
    Table t;
    t.columns = {"t", "re_eps", "im_eps", "re_eps_dot", "im_eps_dot", "abs_eps",
                 "wronskian_residual"};
    constexpr Complex minus_two_i{0.0, -2.0};
    for (const double time : sample_times(cfg)) {
        const auto s = epsilon(time, cfg.params);
        t.rows.push_back({time, s.eps.real(), s.eps.imag(), s.eps_dot.real(), s.eps_dot.imag(),
                          std::abs(s.eps), std::abs(wronskian(s) - minus_two_i)});
    }
    return t;
}

Table cmd_phase_diagram(const RunConfig& cfg) {
    Table t;
    t.columns = {"t", "q_mean", "p_mean", "Q0", "P0"};
    const SmusState s{cfg.z};
    for (const double time : sample_times(cfg)) {
        const auto fm = first_moments(s, time, cfg.params);
        const auto cp = conserved_pair(s, time, cfg.params);
        t.rows.push_back({time, fm.q_mean, fm.p_mean, cp.q0, cp.p0});
    }
    return t;
}

Table cmd_moments(const RunConfig& cfg) {
    Table t;
    t.columns = {"t", "sigma_q2", "sigma_p2", "c_qp", "det_residual", "omega"};
    const double pure = 0.25 * cfg.params.hbar * cfg.params.hbar;
    for (const double time : sample_times(cfg)) {
        const auto c = second_moments(time, cfg.params);
        t.rows.push_back({time, c.sq2, c.sp2, c.cqp, std::abs(c.det() - pure), omega_of(time, cfg.params)});
    }
    return t;
}

Table cmd_coherence(const RunConfig& cfg) {
    Table t;
    t.columns = {"k", "t", "printed_t", "printed_offset", "sq_ratio", "sp_ratio", "c_qp",
                 "det_residual"};
    const auto scan = coherence_scan(cfg.params, cfg.t0, cfg.t1);
    t.notes.emplace_back("always_coherent", scan.always_coherent ? "true" : "false");
    if (scan.always_coherent) {
        const auto r = squeeze_ratios(cfg.t0, cfg.params);
        t.notes.emplace_back("sq_ratio", format_number(r.sq));
        t.notes.emplace_back("sp_ratio", format_number(r.sp));
        return t;
    }
    t.notes.emplace_back("expected_spacing", format_number(std::numbers::pi / (2.0 * omega_after(cfg.params))));
    for (const auto& ev : scan.events)
        t.rows.push_back({static_cast<double>(ev.index), ev.t, ev.printed_t, ev.printed_offset, ev.sq_ratio,
                          ev.sp_ratio, ev.cqp, ev.det_residual});
    return t;
}

WignerResult cmd_wigner(const RunConfig& cfg) {
    WignerResult r{wigner_grid(cfg.time, {cfg.z}, cfg.params, cfg.n_sigma, cfg.n_sigma, cfg.grid, cfg.grid), 0.0};
    r.integral = grid_integral(r.grid);
    return r;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"profile",   "epsilon",  "phase-diagram", "moments",
                                                "wigner",    "coherence", "validate"};
    return names;
}

void run(const RunConfig& cfg, std::ostream& out, std::ostream& console) {
    const auto& c = cfg.command;
    if (c == "profile") write_table(out, cmd_profile(cfg), cfg);
    else if (c == "epsilon") write_table(out, cmd_epsilon(cfg), cfg);
    else if (c == "phase-diagram") write_table(out, cmd_phase_diagram(cfg), cfg);
    else if (c == "moments") write_table(out, cmd_moments(cfg), cfg);
    else if (c == "coherence") write_table(out, cmd_coherence(cfg), cfg);
    else if (c == "wigner") {
        const auto r = cmd_wigner(cfg);
        if (cfg.format == OutputFormat::Json) write_grid_json(out, r.grid);
        else write_grid_csv(out, r.grid);
        console << "normalization " << format_number(r.integral) << '\n';
    } else if (c == "validate") {
        const auto report = cmd_validate(cfg);
        if (cfg.format == OutputFormat::Json) out << report.to_json(cfg).dump(1) << '\n';
        else report.write_text(out);
    } else {
        throw ConfigError("unknown command '" + c + "'");
    }
}

}  // namespace switchosc::cli
