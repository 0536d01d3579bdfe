#ifndef WELLCAST_CSV_HPP
#define WELLCAST_CSV_HPP

#include <istream>
#include <string>
#include <vector>

namespace wellcast {

// Minimal delimited-text reader: RFC-4180 quoting, auto-detected comma or
// semicolon delimiter, tolerant of trailing \r. Enough for production
// exports; not a general CSV library.
class CsvReader {
  public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads the next row; returns false on end of input. Blank lines and
    // lines starting with '#' are skipped.
    bool next_row(std::vector<std::string>& fields);

    // Delimiter is sniffed from the first non-empty line.
    char delimiter() const { return delim_; }

  private:
    bool read_record(std::string& out);

    std::istream& in_;
    char delim_ = 0;
};

std::vector<std::string> split_delimited(const std::string& line, char delim);

}  // namespace wellcast

#endif  // WELLCAST_CSV_HPP
