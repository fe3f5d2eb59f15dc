#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tda {

/// UTC instant, seconds since the Unix epoch.
using Instant = std::int64_t;

inline constexpr Instant kSecondsPerHour = 3600;
inline constexpr Instant kSecondsPerDay = 86400;

/// Parse "YYYY-MM-DDTHH:MM:SSZ" or "YYYY-MM-DD" (midnight). Throws DataError.
Instant parse_instant(std::string_view text);

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_instant(Instant t);

/// "YYYY-MM-DD" of the UTC day containing t.
std::string format_date(Instant t);

/// Midnight UTC of the day containing t (floor, works for t < 0).
Instant floor_to_day(Instant t);

} // namespace tda
