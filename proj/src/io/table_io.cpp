#include "chipfire/io/table_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chipfire::io {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

void write_row_csv(std::ostream& os, const Row& r) {
    os << r.index << ',' << r.y_min;
    for (auto v : r.values) os << ',' << v;
    os << '\n';
}

void write_rows_csv(std::ostream& os, const std::vector<Row>& rows, bool header) {
    if (header) os << "index,y_min,values\n";
    for (const auto& r : rows) write_row_csv(os, r);
}

std::vector<Row> read_rows_csv(std::istream& is) {
    std::vector<Row> rows;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line.rfind("index", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> parts;
        while (std::getline(fields, field, ',')) parts.push_back(field);
        if (parts.size() < 2) throw std::invalid_argument("malformed CSV row: " + line);
        Row r;
        r.index = std::stoull(parts[0]);
        r.y_min = std::stoull(parts[1]);
        for (std::size_t k = 2; k < parts.size(); ++k) r.values.push_back(ChipCount::parse(parts[k]));
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

json value_json(ChipCount v) {
    if (v.fits_u64()) return v.to_u64();
    return v.to_string();
}

ChipCount value_from_json(const json& j) {
    if (j.is_string()) return ChipCount::parse(j.get<std::string>());
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    throw std::invalid_argument("row value must be a nonnegative integer");
}

}  // namespace

std::string rows_to_json(unsigned n, const std::vector<Row>& rows, int indent) {
    json doc;
    doc["n"] = n;
    doc["row_count"] = rows.size();
    json arr = json::array();
    for (const auto& r : rows) {
        json values = json::array();
        for (auto v : r.values) values.push_back(value_json(v));
        arr.push_back({{"index", r.index}, {"y_min", r.y_min}, {"values", std::move(values)}});
    }
    doc["rows"] = std::move(arr);
    return doc.dump(indent);
}

std::vector<Row> rows_from_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<Row> rows;
    for (const auto& jr : doc.at("rows")) {
        Row r;
        r.index = jr.at("index").get<std::uint64_t>();
        r.y_min = jr.at("y_min").get<std::uint64_t>();
        for (const auto& v : jr.at("values")) r.values.push_back(value_from_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace chipfire::io
