#ifndef KPOISSON_CLI_RECORDS_HPP
#define KPOISSON_CLI_RECORDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace kpoisson::cli {

enum class RecordKind { moment, pmf, coeff, verify, sample };
enum class Format { text, csv, json };

std::string_view to_string(RecordKind kind);
/// Throws ParseError for anything but text, csv or json.
Format parse_format(std::string_view text);

/// One line of output. Coefficients and exact values are decimal strings so
/// they survive any JSON reader without precision loss.
struct OutputRecord {
    RecordKind kind = RecordKind::moment;
    int k = 0;
    int n = 0;
    std::optional<std::string> lambda;
    std::optional<std::vector<std::string>> coeffs;
    std::optional<std::string> value;
    std::optional<nlohmann::ordered_json> status;
};

/// {"kind", "k", "n", "lambda", "coeffs", "value", "status"} in that order,
/// absent fields as null.
nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

inline constexpr std::string_view kCsvHeader = "kind,k,n,lambda,coeffs,value,status";

/// Same fields as the JSON form: coeffs joined with ';', status as compact
/// JSON, absent fields empty.
std::string to_csv_row(const OutputRecord& r);

/// JSON lines or CSV (header first). Text rendering is per command.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

} // namespace kpoisson::cli

#endif
