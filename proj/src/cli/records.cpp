#include "kpoisson/cli/records.hpp"

#include <array>
#include <charconv>

#include "kpoisson/errors.hpp"

namespace kpoisson::cli {

namespace {

constexpr std::array<std::pair<RecordKind, std::string_view>, 5> kKindNames{{
    {RecordKind::moment, "moment"},
    {RecordKind::pmf, "pmf"},
    {RecordKind::coeff, "coeff"},
    {RecordKind::verify, "verify"},
    {RecordKind::sample, "sample"},
}};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string_view to_string(RecordKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "unknown";
}

Format parse_format(std::string_view text) {
    if (text == "text")
        return Format::text;
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    throw ParseError("unknown format '" + std::string(text) + "' (expected text, csv or json)");
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(r.kind));
    j["k"] = r.k;
    j["n"] = r.n;
    j["lambda"] = r.lambda ? nlohmann::ordered_json(*r.lambda) : nlohmann::ordered_json(nullptr);
    j["coeffs"] = r.coeffs ? nlohmann::ordered_json(*r.coeffs) : nlohmann::ordered_json(nullptr);
    j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    j["status"] = r.status ? *r.status : nlohmann::ordered_json(nullptr);
    return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
    OutputRecord r;
    const auto kind = j.at("kind").get<std::string>();
    bool known = false;
    for (const auto& [k, name] : kKindNames) {
        if (name == kind) {
            r.kind = k;
            known = true;
        }
    }
    if (!known)
        throw ParseError("unknown record kind '" + kind + "'");
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    if (!j.at("lambda").is_null())
        r.lambda = j.at("lambda").get<std::string>();
    if (!j.at("coeffs").is_null())
        r.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    if (!j.at("value").is_null())
        r.value = j.at("value").get<std::string>();
    if (!j.at("status").is_null())
        r.status = j.at("status");
    return r;
}

std::string to_csv_row(const OutputRecord& r) {
    std::string coeffs;
    if (r.coeffs) {
        for (std::size_t i = 0; i < r.coeffs->size(); ++i) {
            if (i > 0)
                coeffs += ';';
            coeffs += (*r.coeffs)[i];
        }
    }
    std::string row = std::string(to_string(r.kind));
    row += ',' + std::to_string(r.k);
    row += ',' + std::to_string(r.n);
    row += ',' + csv_escape(r.lambda.value_or(""));
    row += ',' + csv_escape(coeffs);
    row += ',' + csv_escape(r.value.value_or(""));
    row += ',' + csv_escape(r.status ? r.status->dump() : "");
    return row;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
    if (format == Format::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records)
            out << to_csv_row(r) << '\n';
        return;
    }
    for (const auto& r : records)
        out << to_json(r).dump() << '\n';
}

std::string format_double(double x) {
    std::array<char, 40> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

} // namespace kpoisson::cli
