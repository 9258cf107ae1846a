#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tifo {

// Timestamps are UTC unix seconds throughout the library.
using Timestamp = std::int64_t;

inline constexpr std::int64_t kSecondsPerDay = 86400;

// Parses "YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]" or a bare "YYYY-MM-DD"
// (midnight). Fractional seconds are truncated. Throws ParseError.
Timestamp parse_iso8601_utc(std::string_view s);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601_utc(Timestamp t);

// Start of the UTC calendar day containing t.
constexpr Timestamp floor_to_day(Timestamp t) {
    std::int64_t d = t / kSecondsPerDay;
    if (t % kSecondsPerDay < 0) --d;
    return d * kSecondsPerDay;
}

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int y, unsigned m, unsigned d);
void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d);

}  // namespace tifo
