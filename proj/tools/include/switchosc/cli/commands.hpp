#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "switchosc/cli/config.hpp"
#include "switchosc/cli/table.hpp"
#include "switchosc/wigner.hpp"

namespace switchosc::cli {

Table cmd_profile(const RunConfig& cfg);        // t, omega
Table cmd_epsilon(const RunConfig& cfg);        // eps, eps', |eps|, Wronskian residual
Table cmd_phase_diagram(const RunConfig& cfg);  // <q>, <p>, Q0, P0
Table cmd_moments(const RunConfig& cfg);        // sq2, sp2, cqp, det residual, omega
Table cmd_coherence(const RunConfig& cfg);      // zeros of c_qp after the switch

struct WignerResult {
    WignerGrid grid;
    double integral = 0.0;
};

WignerResult cmd_wigner(const RunConfig& cfg);

/// One adjudicated consistency check.
struct ValidationCheck {
    std::string name;
    std::string summary;
    nlohmann::ordered_json evidence;
    std::string verdict;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    nlohmann::ordered_json to_json(const RunConfig& cfg) const;
    void write_text(std::ostream& os) const;
};

/// Re-derives the printed constants that disagree with the continuous
/// solution and measures each against the numerical oracles. Throws only
/// when an oracle itself fails.
ValidationReport cmd_validate(const RunConfig& cfg);

/// Runs `cfg.command` and renders its output exactly as the executable
/// writes it to --out (or stdout). Summary lines meant for the terminal go
/// to `console`.
void run(const RunConfig& cfg, std::ostream& out, std::ostream& console);

const std::vector<std::string>& command_names();

}  // namespace switchosc::cli
