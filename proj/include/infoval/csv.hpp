#pragma once

#include <string>
#include <vector>

#include "infoval/common.hpp"

namespace infoval {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 reader: quoted fields, doubled-quote escapes, CRLF and bare LF,
/// newlines inside quoted fields. Ragged rows raise SchemaError with the
/// 1-based line number of the offending record.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

/// Writer quotes fields containing separators, quotes, or newlines.
std::string format_csv(const CsvTable& table);
void write_csv(const std::string& path, const CsvTable& table);

}  // namespace infoval
