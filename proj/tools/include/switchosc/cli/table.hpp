#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "switchosc/cli/config.hpp"

namespace switchosc::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    /// Extra key/value facts, emitted as "# key=value" lines in CSV and
    /// under "notes" in JSON.
    std::vector<std::pair<std::string, std::string>> notes;

    std::vector<double> column(const std::string& name) const;
};

/// '#' comment header with the run configuration, one row of column names,
/// then rows with 17 significant digits.
void write_csv(std::ostream& os, const Table& t, const RunConfig& cfg);

/// {"config": {...}, "columns": [...], "rows": [[...], ...]} (plus "notes"
/// when present).
void write_json(std::ostream& os, const Table& t, const RunConfig& cfg);

nlohmann::ordered_json config_json(const RunConfig& cfg);

void write_table(std::ostream& os, const Table& t, const RunConfig& cfg);

}  // namespace switchosc::cli
