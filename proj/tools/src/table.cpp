#include "switchosc/cli/table.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "switchosc/format.hpp"

namespace switchosc::cli {

std::vector<double> Table::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw ConfigError("no column named " + name);
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

void write_csv(std::ostream& os, const Table& t, const RunConfig& cfg) {
    for (const auto& line : describe(cfg)) os << "# " << line << '\n';
    for (const auto& [k, v] : t.notes) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
    nlohmann::ordered_json c{{"command", cfg.command},
                             {"mass", cfg.params.m},
                             {"hbar", cfg.params.hbar},
                             {"alpha", cfg.params.alpha},
                             {"omega", cfg.params.omega},
                             {"z_re", cfg.z.real()},
                             {"z_im", cfg.z.imag()},
                             {"t0", cfg.t0},
                             {"t1", cfg.t1},
                             {"samples", cfg.samples}};
    if (cfg.command == "wigner") {
        c["time"] = cfg.time;
        c["n_sigma"] = cfg.n_sigma;
        c["grid"] = cfg.grid;
    }
    return c;
}

void write_json(std::ostream& os, const Table& t, const RunConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["config"] = config_json(cfg);
    doc["columns"] = t.columns;
    doc["rows"] = t.rows;
    if (!t.notes.empty()) {
        nlohmann::ordered_json notes = nlohmann::ordered_json::object();
        for (const auto& [k, v] : t.notes) notes[k] = v;
        doc["notes"] = notes;
    }
    os << doc.dump(1) << '\n';
}

void write_table(std::ostream& os, const Table& t, const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Json) write_json(os, t, cfg);
    else write_csv(os, t, cfg);
}

}  // namespace switchosc::cli
