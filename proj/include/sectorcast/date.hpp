#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sectorcast {

// Calendar date with day resolution, stored as days since 1970-01-01.
// Cheap to copy and compare; trading-day arithmetic is plain integer math.
struct Date {
    std::int32_t days = 0;

    static Date from_ymd(int year, int month, int day);
    static std::optional<Date> parse(std::string_view iso);  // YYYY-MM-DD

    std::string to_string() const;
    std::int64_t epoch_seconds() const { return static_cast<std::int64_t>(days) * 86400; }

    Date plus_days(int n) const { return Date{days + n}; }

    auto operator<=>(const Date&) const = default;
};

struct DateRange {
    Date start;
    Date end;

    bool contains(Date d) const { return start <= d && d <= end; }
    void validate() const;  // start < end
};

}  // namespace sectorcast
