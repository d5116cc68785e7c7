#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypercone {

/// Machine-readable result of one CLI subcommand: echoed parameters, one
/// table of string-valued cells, and an overall verdict. Decimal strings
/// carry exactly the requested digit count; exact fractions print as
/// "num/den".
struct OutputRecord {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool pass = true;

    std::string status() const { return pass ? "pass" : "fail"; }
};

/// Comma-separated rendering: "# key: value" comment lines, a header row,
/// unquoted cells, and a trailing "# status:" line.
std::string to_csv(const OutputRecord& rec);

/// JSON object mirroring the same fields (params as an ordered object).
std::string to_json(const OutputRecord& rec);

std::string render_record(const OutputRecord& rec, const std::string& format);

}  // namespace hypercone
