#ifndef WELLCAST_INGEST_HPP
#define WELLCAST_INGEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "wellcast/well_series.hpp"

namespace wellcast {

// Column-name map for the production export. Defaults follow the public
// Volve schema; override entries when ingesting renamed exports.
struct CsvSchema {
    std::string date_column = "DATEPRD";
    std::string well_type_column = "WELL_TYPE";
    std::string flow_kind_column = "FLOW_KIND";  // optional in the input
    // First match wins; the export carries both a code and a display name.
    std::vector<std::string> well_code_columns = {"WELL_BORE_CODE", "NPD_WELL_BORE_NAME",
                                                  "WELL_NAME", "WELL"};
    // Attribute -> column name, canonical attr order.
    std::array<std::string, kAttrCount> attr_columns = default_attr_columns();

    static std::array<std::string, kAttrCount> default_attr_columns();
};

// Parses a production CSV into one WellSeries per well code.
//
// Rows are grouped by well, sorted by date, and validated: duplicate
// (well, date) rows raise DataError listing the offenders; a header missing
// a required column raises SchemaError naming it. Unparseable numeric
// cells, empty cells, "NULL", and negative values of nonnegative attributes
// all record as missing.
std::vector<WellSeries> parse_production_csv(std::istream& source,
                                             const CsvSchema& schema = {});

// Canonical dataset file: '#'-prefixed version line, CSV header, one record
// per line, "NA" for missing, shortest-round-trip doubles. Reading back
// reproduces the series bitwise.
void write_canonical(std::ostream& out, const std::vector<WellSeries>& wells);
std::vector<WellSeries> read_canonical(std::istream& in);

void write_canonical_file(const std::string& path, const std::vector<WellSeries>& wells);
std::vector<WellSeries> read_canonical_file(const std::string& path);

}  // namespace wellcast

#endif  // WELLCAST_INGEST_HPP
