#include "tifo/timeutil.hpp"

#include <cctype>
#include <cstdio>

#include "tifo/errors.hpp"

namespace tifo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    // Howard Hinnant's algorithm.
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yy + (m <= 2));
}

Timestamp parse_iso8601_utc(std::string_view s) {
    auto fail = [&] { throw ParseError("bad timestamp '" + std::string(s) + "'"); };

    if (s.size() < 10 || s[4] != '-' || s[7] != '-') fail();
    std::string_view ys = s.substr(0, 4), ms = s.substr(5, 2), ds = s.substr(8, 2);
    if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) fail();
    int year = to_int(ys);
    unsigned month = static_cast<unsigned>(to_int(ms));
    unsigned day = static_cast<unsigned>(to_int(ds));
    if (month < 1 || month > 12 || day < 1 || day > 31) fail();
    {
        // Reject dates the calendar normalizes away (e.g. Feb 31).
        int y2;
        unsigned m2, d2;
        civil_from_days(days_from_civil(year, month, day), y2, m2, d2);
        if (y2 != year || m2 != month || d2 != day) fail();
    }

    int hh = 0, mi = 0, ss = 0;
    if (s.size() > 10) {
        if (s[10] != 'T' && s[10] != ' ') fail();
        std::string_view rest = s.substr(11);
        if (rest.size() < 8 || rest[2] != ':' || rest[5] != ':') fail();
        std::string_view hs = rest.substr(0, 2), mis = rest.substr(3, 2), sss = rest.substr(6, 2);
        if (!all_digits(hs) || !all_digits(mis) || !all_digits(sss)) fail();
        hh = to_int(hs);
        mi = to_int(mis);
        ss = to_int(sss);
        if (hh > 23 || mi > 59 || ss > 60) fail();
        std::string_view tail = rest.substr(8);
        if (!tail.empty() && tail[0] == '.') {
            size_t i = 1;
            while (i < tail.size() && std::isdigit(static_cast<unsigned char>(tail[i]))) ++i;
            if (i == 1) fail();
            tail = tail.substr(i);
        }
        if (!tail.empty()) {
            if (tail == "Z" || tail == "+00:00" || tail == "+0000")
                ;  // explicit UTC
            else
                fail();
        }
    }
    return days_from_civil(year, month, day) * kSecondsPerDay + hh * 3600 + mi * 60 + ss;
}

std::string format_iso8601_utc(Timestamp t) {
    std::int64_t days = t / kSecondsPerDay;
    std::int64_t sec = t % kSecondsPerDay;
    if (sec < 0) {
        sec += kSecondsPerDay;
        --days;
    }
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, m, d,
                  static_cast<long long>(sec / 3600), static_cast<long long>((sec / 60) % 60),
                  static_cast<long long>(sec % 60));
    return buf;
}

}  // namespace tifo
