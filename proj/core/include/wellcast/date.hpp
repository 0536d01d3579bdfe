#ifndef WELLCAST_DATE_HPP
#define WELLCAST_DATE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wellcast {

// Calendar day stored as days since 1970-01-01. Cheap to order and to step
// by one day, which is all the windowing code ever needs.
class CalDate {
  public:
    CalDate() = default;
    explicit CalDate(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

    static CalDate from_ymd(int year, unsigned month, unsigned day);

    // Accepts the production-export format ("07-Apr-14", also 4-digit years)
    // and ISO-8601 ("2014-04-07"). Returns nullopt on anything else.
    static std::optional<CalDate> parse(std::string_view text);

    std::int32_t days() const { return days_; }
    CalDate next_day() const { return CalDate(days_ + 1); }

    void to_ymd(int& year, unsigned& month, unsigned& day) const;
    std::string to_iso() const;        // "2014-04-07"
    std::string to_export() const;     // "07-Apr-14"

    auto operator<=>(const CalDate&) const = default;

  private:
    std::int32_t days_ = 0;
};

}  // namespace wellcast

#endif  // WELLCAST_DATE_HPP
