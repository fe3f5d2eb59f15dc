#include "tda/time.hpp"

#include "tda/errors.hpp"

#include <cstdio>

namespace tda {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
    static const unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[m - 1];
}

} // namespace

Instant parse_instant(std::string_view text) {
    int y = 0, mo = 0, da = 0, h = 0, mi = 0, s = 0;
    char z = '\0';
    const std::string buf(text);
    int n = std::sscanf(buf.c_str(), "%d-%d-%dT%d:%d:%d%c", &y, &mo, &da, &h, &mi, &s, &z);
    if (n == 7 && z != 'Z')
        throw DataError("timestamp not UTC (expected trailing 'Z'): " + buf);
    if (n != 7) {
        h = mi = s = 0;
        n = std::sscanf(buf.c_str(), "%d-%d-%d", &y, &mo, &da);
        if (n != 3)
            throw DataError("unparseable timestamp: " + buf);
    }
    if (mo < 1 || mo > 12 || da < 1 ||
        da > static_cast<int>(days_in_month(y, static_cast<unsigned>(mo))) ||
        h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60)
        throw DataError("timestamp field out of range: " + buf);
    return days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(da)) * kSecondsPerDay +
           h * kSecondsPerHour + mi * 60 + s;
}

Instant floor_to_day(Instant t) {
    Instant d = t / kSecondsPerDay;
    if (t < 0 && t % kSecondsPerDay != 0)
        --d;
    return d * kSecondsPerDay;
}

std::string format_instant(Instant t) {
    const Instant day = floor_to_day(t);
    const Instant sec = t - day;
    std::int64_t y;
    unsigned mo, da;
    civil_from_days(day / kSecondsPerDay, y, mo, da);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), mo, da,
                  static_cast<long long>(sec / 3600),
                  static_cast<long long>((sec / 60) % 60),
                  static_cast<long long>(sec % 60));
    return buf;
}

std::string format_date(Instant t) {
    std::int64_t y;
    unsigned mo, da;
    civil_from_days(floor_to_day(t) / kSecondsPerDay, y, mo, da);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02u", static_cast<long long>(y), mo, da);
    return buf;
}

} // namespace tda
