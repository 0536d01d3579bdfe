#include "wellcast/date.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace wellcast {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

// Howard Hinnant's civil-days algorithms; exact for the proleptic Gregorian
// calendar over any realistic production history.
std::int32_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int>(doe) - 719468;
}

void civil_from_days(std::int32_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int yr = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

int month_from_name(std::string_view name) {
    if (name.size() != 3) return 0;
    for (int i = 0; i < 12; ++i) {
        const auto& m = kMonthNames[static_cast<size_t>(i)];
        if (std::tolower(name[0]) == std::tolower(m[0]) &&
            std::tolower(name[1]) == std::tolower(m[1]) &&
            std::tolower(name[2]) == std::tolower(m[2]))
            return i + 1;
    }
    return 0;
}

bool valid_ymd(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr int len[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int n = len[m - 1];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) n = 29;
    return d <= n;
}

}  // namespace

CalDate CalDate::from_ymd(int year, unsigned month, unsigned day) {
    return CalDate(days_from_civil(year, month, day));
}

void CalDate::to_ymd(int& year, unsigned& month, unsigned& day) const {
    civil_from_days(days_, year, month, day);
}

std::optional<CalDate> CalDate::parse(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    // Strip a time-of-day suffix if present ("2014-04-07 00:00:00").
    if (auto pos = text.find(' '); pos != std::string_view::npos) text = text.substr(0, pos);

    auto p1 = text.find('-');
    auto p2 = text.rfind('-');
    if (p1 == std::string_view::npos || p2 == p1) return std::nullopt;
    std::string_view a = text.substr(0, p1);
    std::string_view b = text.substr(p1 + 1, p2 - p1 - 1);
    std::string_view c = text.substr(p2 + 1);

    int year = 0, day = 0, month = 0;
    if (a.size() == 4 && parse_int(a, year)) {
        // ISO-8601: yyyy-mm-dd
        if (!parse_int(b, month) || !parse_int(c, day)) return std::nullopt;
    } else if (parse_int(a, day)) {
        // Export form: dd-MMM-yy or dd-MMM-yyyy
        month = month_from_name(b);
        if (month == 0 || !parse_int(c, year)) return std::nullopt;
        if (c.size() <= 2) year += year < 70 ? 2000 : 1900;
    } else {
        return std::nullopt;
    }
    if (!valid_ymd(year, month, day)) return std::nullopt;
    return from_ymd(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
}

std::string CalDate::to_iso() const {
    int y;
    unsigned m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", y, m, d);
    return buf;
}

std::string CalDate::to_export() const {
    int y;
    unsigned m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02u-%s-%02d", d, std::string(kMonthNames[m - 1]).c_str(),
                  y % 100);
    return buf;
}

}  // namespace wellcast
