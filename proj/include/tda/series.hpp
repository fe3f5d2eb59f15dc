#pragma once

#include "tda/time.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tda {

enum class Cadence { Hourly, Daily };

Instant cadence_step(Cadence c);
std::string cadence_name(Cadence c);
Cadence cadence_from_name(const std::string& name);

struct Sample {
    Instant timestamp = 0;
    double value = 0.0;
    // Set by aggregate_daily when a day had fewer hours than expected.
    bool flagged = false;
};

/// Ordered scalar samples at a declared cadence. Timestamps are strictly
/// increasing and consecutive gaps are integer multiples of the cadence step.
struct TimeSeries {
    std::vector<Sample> samples;
    Cadence cadence = Cadence::Daily;
    std::string label;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

struct Gap {
    Instant start = 0; // first missing expected timestamp
    Instant end = 0;   // one cadence step past the last missing timestamp
    std::int64_t missing_count = 0;
};

/// Parse CSV with header `timestamp,value`, ISO-8601 UTC timestamps.
/// Rows are sorted by timestamp; duplicates, non-finite values, malformed
/// rows and cadence violations raise DataError with the line number.
TimeSeries parse_series(std::istream& in, Cadence cadence, std::string label = {});

/// Write the same CSV layout; values at 9 significant digits.
void write_series(std::ostream& out, const TimeSeries& series);

/// Mean of each UTC calendar day's hourly values; output timestamps are
/// midnight UTC, cadence daily. Days with fewer than 24 samples are flagged.
TimeSeries aggregate_daily(const TimeSeries& hourly);

/// Samples with start <= timestamp < end. Empty result raises DataError.
TimeSeries slice_range(const TimeSeries& series, Instant start, Instant end);

/// Maximal runs of missing expected samples per the declared cadence.
std::vector<Gap> find_gaps(const TimeSeries& series);

/// CSV `gap_start,gap_end,missing_count`.
void write_gap_report(std::ostream& out, const std::vector<Gap>& gaps);

} // namespace tda
