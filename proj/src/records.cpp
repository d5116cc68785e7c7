#include "hypercone/records.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace hypercone {

std::string to_csv(const OutputRecord& rec) {
    std::ostringstream os;
    os << "# subcommand: " << rec.subcommand << "\n";
    for (const auto& [k, v] : rec.params) os << "# " << k << ": " << v << "\n";
    for (size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) os << ",";
        os << rec.columns[i];
    }
    os << "\n";
    for (const auto& row : rec.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    os << "# status: " << rec.status() << "\n";
    return os.str();
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["subcommand"] = rec.subcommand;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = params;
    j["columns"] = rec.columns;
    j["rows"] = rec.rows;
    j["status"] = rec.status();
    return j.dump(2) + "\n";
}

std::string render_record(const OutputRecord& rec, const std::string& format) {
    if (format == "csv") return to_csv(rec);
    if (format == "json") return to_json(rec);
    throw std::invalid_argument("render_record: unknown format '" + format + "'");
}

}  // namespace hypercone
