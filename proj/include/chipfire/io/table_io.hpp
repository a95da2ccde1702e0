#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire::io {

enum class Format { csv, json };

std::optional<Format> parse_format(std::string_view s);

/// CSV: one line per row, "index,y_min,v0,v1,...". No header unless `header` is set.
void write_rows_csv(std::ostream& os, const std::vector<Row>& rows, bool header = false);
void write_row_csv(std::ostream& os, const Row& r);
/// Parses what write_rows_csv produced (a leading header line is skipped).
std::vector<Row> read_rows_csv(std::istream& is);

/// JSON: {"n": n, "row_count": k, "rows": [{"index":..,"y_min":..,"values":[..]}, ...]}.
/// Values that do not fit in 64 bits are written as decimal strings.
std::string rows_to_json(unsigned n, const std::vector<Row>& rows, int indent = -1);
std::vector<Row> rows_from_json(const std::string& text);

}  // namespace chipfire::io
