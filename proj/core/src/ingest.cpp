#include "wellcast/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "wellcast/csv.hpp"
#include "wellcast/errors.hpp"
#include "wellcast/numio.hpp"

namespace wellcast {

namespace {

std::string to_upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_missing_sentinel(const std::string& cell) {
    if (cell.empty()) return true;
    const std::string u = to_upper(cell);
    return u == "NULL" || u == "NA" || u == "NAN" || u == "N/A";
}

int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::array<std::string, kAttrCount> CsvSchema::default_attr_columns() {
    std::array<std::string, kAttrCount> cols;
    for (Attr a : kAllAttrs) cols[attr_index(a)] = std::string(attr_csv_column(a));
    return cols;
}

std::vector<WellSeries> parse_production_csv(std::istream& source, const CsvSchema& schema) {
    CsvReader reader(source);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw SchemaError("empty input: no header row");

    std::vector<std::string> header;
    header.reserve(row.size());
    for (const auto& h : row) header.push_back(to_upper(trim(h)));

    const int date_col = find_column(header, schema.date_column);
    if (date_col < 0) throw SchemaError("missing required column: " + schema.date_column);
    const int type_col = find_column(header, schema.well_type_column);
    if (type_col < 0) throw SchemaError("missing required column: " + schema.well_type_column);
    const int flow_col = find_column(header, schema.flow_kind_column);

    int well_col = -1;
    for (const auto& cand : schema.well_code_columns) {
        well_col = find_column(header, cand);
        if (well_col >= 0) break;
    }
    if (well_col < 0) {
        std::string tried;
        for (const auto& c : schema.well_code_columns) {
            if (!tried.empty()) tried += ", ";
            tried += c;
        }
        throw SchemaError("missing well identifier column (tried: " + tried + ")");
    }

    std::array<int, kAttrCount> attr_cols{};
    for (Attr a : kAllAttrs) {
        const auto& name = schema.attr_columns[attr_index(a)];
        const int col = find_column(header, name);
        if (col < 0) throw SchemaError("missing required column: " + name);
        attr_cols[attr_index(a)] = col;
    }

    // Accumulate per well, preserving first-seen order of wells.
    std::vector<WellSeries> wells;
    std::map<std::string, std::size_t> index_of;

    auto cell_at = [](const std::vector<std::string>& r, int col) -> std::string {
        return col >= 0 && static_cast<std::size_t>(col) < r.size()
                   ? trim(r[static_cast<std::size_t>(col)])
                   : std::string{};
    };

    std::size_t line_no = 1;
    while (reader.next_row(row)) {
        ++line_no;
        const std::string code = cell_at(row, well_col);
        if (code.empty()) continue;  // stray footer rows

        const std::string date_text = cell_at(row, date_col);
        auto date = CalDate::parse(date_text);
        if (!date) throw DataError("unparseable date '" + date_text + "' at data row " +
                                   std::to_string(line_no));

        auto [it, inserted] = index_of.try_emplace(code, wells.size());
        if (inserted) {
            wells.push_back(WellSeries{code, WellType::producer, {}});
        }
        WellSeries& ws = wells[it->second];

        const std::string type_text = to_upper(cell_at(row, type_col));
        const std::string flow_text = to_upper(cell_at(row, flow_col));
        if (type_text == "WI" || type_text == "INJECTOR" || flow_text == "INJECTION")
            ws.well_type = WellType::injector;

        DailyRecord rec;
        rec.date = *date;
        for (Attr a : kAllAttrs) {
            const std::string cell = cell_at(row, attr_cols[attr_index(a)]);
            if (is_missing_sentinel(cell)) continue;
            auto v = parse_double(cell);
            if (!v || !std::isfinite(*v)) continue;  // unparseable -> missing, not an error
            if (attr_nonnegative(a) && *v < 0.0) continue;
            rec.set(a, *v);
        }
        ws.records.push_back(rec);
    }

    // Normalize to date order and reject duplicate (well, date) pairs.
    std::string dup_report;
    for (auto& ws : wells) {
        std::stable_sort(ws.records.begin(), ws.records.end(),
                         [](const DailyRecord& a, const DailyRecord& b) { return a.date < b.date; });
        for (std::size_t i = 1; i < ws.records.size(); ++i) {
            if (ws.records[i].date == ws.records[i - 1].date) {
                if (!dup_report.empty()) dup_report += "; ";
                dup_report += ws.well_code + " @ " + ws.records[i].date.to_iso();
            }
        }
    }
    if (!dup_report.empty()) throw DataError("duplicate (well, date) rows: " + dup_report);

    return wells;
}

void write_canonical(std::ostream& out, const std::vector<WellSeries>& wells) {
    out << "# wellcast canonical dataset v1\n";
    out << "well_code,well_type,date";
    for (Attr a : kAllAttrs) out << ',' << attr_code(a);
    out << '\n';
    for (const auto& ws : wells) {
        for (const auto& rec : ws.records) {
            out << ws.well_code << ',' << well_type_name(ws.well_type) << ','
                << rec.date.to_iso();
            for (Attr a : kAllAttrs) {
                out << ',';
                if (rec.present(a))
                    out << format_double(*rec.value(a));
                else
                    out << "NA";
            }
            out << '\n';
        }
    }
}

std::vector<WellSeries> read_canonical(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw SchemaError("canonical file: no header");
    if (row.size() != 3 + kAttrCount || row[0] != "well_code")
        throw SchemaError("canonical file: unexpected header layout");
    for (Attr a : kAllAttrs)
        if (row[3 + attr_index(a)] != attr_code(a))
            throw SchemaError("canonical file: attribute column mismatch at " +
                              std::string(attr_code(a)));

    std::vector<WellSeries> wells;
    std::map<std::string, std::size_t> index_of;
    while (reader.next_row(row)) {
        if (row.size() != 3 + kAttrCount)
            throw DataError("canonical file: bad field count on row for '" + row[0] + "'");
        auto [it, inserted] = index_of.try_emplace(row[0], wells.size());
        if (inserted) wells.push_back(WellSeries{row[0], WellType::producer, {}});
        WellSeries& ws = wells[it->second];
        ws.well_type = row[1] == "injector" ? WellType::injector : WellType::producer;

        DailyRecord rec;
        auto date = CalDate::parse(row[2]);
        if (!date) throw DataError("canonical file: bad date '" + row[2] + "'");
        rec.date = *date;
        for (Attr a : kAllAttrs) {
            const std::string& cell = row[3 + attr_index(a)];
            if (cell == "NA") continue;
            auto v = parse_double(cell);
            if (!v) throw DataError("canonical file: bad numeric cell '" + cell + "'");
            rec.set(a, *v);
        }
        ws.records.push_back(rec);
    }
    for (auto& ws : wells)
        for (std::size_t i = 1; i < ws.records.size(); ++i)
            if (!(ws.records[i - 1].date < ws.records[i].date))
                throw DataError("canonical file: records out of order for " + ws.well_code);
    return wells;
}

void write_canonical_file(const std::string& path, const std::vector<WellSeries>& wells) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_canonical(out, wells);
    if (!out.flush()) throw DataError("write failed: " + path);
}

std::vector<WellSeries> read_canonical_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    return read_canonical(in);
}

}  // namespace wellcast
