#include "wellcast/csv.hpp"

#include <algorithm>

namespace wellcast {

std::vector<std::string> split_delimited(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delim) {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

bool CsvReader::read_record(std::string& out) {
    // A record can span lines when a quoted field contains a newline.
    out.clear();
    std::string line;
    bool have = false;
    while (std::getline(in_, line)) {
        if (!have) {
            out = line;
        } else {
            out += '\n';
            out += line;
        }
        have = true;
        const auto quotes = std::count(out.begin(), out.end(), '"');
        if (quotes % 2 == 0) return true;
    }
    return have;
}

bool CsvReader::next_row(std::vector<std::string>& fields) {
    std::string record;
    while (read_record(record)) {
        // Skip blanks and comment lines.
        std::size_t first = record.find_first_not_of(" \t\r");
        if (first == std::string::npos || record[first] == '#') continue;
        if (delim_ == 0) {
            // Sniff: prefer the separator that appears outside quotes.
            std::size_t commas = 0, semis = 0;
            bool q = false;
            for (char c : record) {
                if (c == '"') q = !q;
                else if (!q && c == ',') ++commas;
                else if (!q && c == ';') ++semis;
            }
            delim_ = semis > commas ? ';' : ',';
        }
        fields = split_delimited(record, delim_);
        return true;
    }
    return false;
}

}  // namespace wellcast
