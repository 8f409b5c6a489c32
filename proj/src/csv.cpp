#include "infoval/csv.hpp"

#include <fstream>
#include <sstream>

namespace infoval {

namespace {

std::vector<std::vector<std::string>> parse_records(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        // Skip records that are a single empty field (trailing blank lines).
        if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field.empty() && !field_started) {
                    in_quotes = true;
                    field_started = true;
                } else {
                    throw SchemaError("csv line " + std::to_string(line) + ": quote inside unquoted field");
                }
                break;
            case ',':
                end_field();
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field.push_back(c);
                field_started = true;
        }
    }
    if (in_quotes) throw SchemaError("csv line " + std::to_string(line) + ": unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
    auto records = parse_records(text);
    if (records.empty()) throw SchemaError("csv: missing header row");
    CsvTable table;
    table.header = std::move(records[0]);
    table.rows.assign(std::make_move_iterator(records.begin() + 1), std::make_move_iterator(records.end()));
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.header.size()) {
            throw SchemaError("csv line " + std::to_string(r + 2) + ": expected " +
                              std::to_string(table.header.size()) + " fields, got " +
                              std::to_string(table.rows[r].size()));
        }
    }
    return table;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

std::string format_csv(const CsvTable& table) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            if (needs_quoting(row[i])) {
                out.push_back('"');
                for (char c : row[i]) {
                    if (c == '"') out.push_back('"');
                    out.push_back(c);
                }
                out.push_back('"');
            } else {
                out += row[i];
            }
        }
        out.push_back('\n');
    };
    append_row(table.header);
    for (const auto& row : table.rows) append_row(row);
    return out;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << format_csv(table);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace infoval
