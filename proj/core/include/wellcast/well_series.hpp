#ifndef WELLCAST_WELL_SERIES_HPP
#define WELLCAST_WELL_SERIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wellcast/attributes.hpp"
#include "wellcast/date.hpp"

namespace wellcast {

enum class WellType { producer, injector };

inline std::string_view well_type_name(WellType t) {
    return t == WellType::producer ? "producer" : "injector";
}

// One calendar day of one well. Absent cells stay absent; every stored
// value is finite (enforced at parse time).
struct DailyRecord {
    CalDate date;
    std::array<std::optional<double>, kAttrCount> values;

    const std::optional<double>& value(Attr a) const { return values[attr_index(a)]; }
    void set(Attr a, double v) { values[attr_index(a)] = v; }
    void clear(Attr a) { values[attr_index(a)].reset(); }
    bool present(Attr a) const { return values[attr_index(a)].has_value(); }
};

// Date-ordered daily history of a single well. Immutable once parsed;
// injector series carry data but are excluded from model datasets.
struct WellSeries {
    std::string well_code;
    WellType well_type = WellType::producer;
    std::vector<DailyRecord> records;

    bool empty() const { return records.empty(); }
    std::size_t size() const { return records.size(); }
};

}  // namespace wellcast

#endif  // WELLCAST_WELL_SERIES_HPP
