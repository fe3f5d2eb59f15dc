#include "tda/series.hpp"

#include "tda/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>

namespace tda {

Instant cadence_step(Cadence c) {
    return c == Cadence::Hourly ? kSecondsPerHour : kSecondsPerDay;
}

std::string cadence_name(Cadence c) {
    return c == Cadence::Hourly ? "hourly" : "daily";
}

Cadence cadence_from_name(const std::string& name) {
    if (name == "hourly")
        return Cadence::Hourly;
    if (name == "daily")
        return Cadence::Daily;
    throw ConfigError("unknown cadence: " + name);
}

TimeSeries parse_series(std::istream& in, Cadence cadence, std::string label) {
    std::string line;
    if (!std::getline(in, line))
        throw DataError("empty input: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "timestamp,value")
        throw DataError("bad header, expected 'timestamp,value', got '" + line + "'");

    TimeSeries ts;
    ts.cadence = cadence;
    ts.label = std::move(label);

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw DataError("line " + std::to_string(lineno) + ": missing comma");
        Instant t;
        try {
            t = parse_instant(std::string_view(line).substr(0, comma));
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
        char* endp = nullptr;
        const std::string vtext = line.substr(comma + 1);
        const double v = std::strtod(vtext.c_str(), &endp);
        if (endp == vtext.c_str() || *endp != '\0')
            throw DataError("line " + std::to_string(lineno) + ": bad value '" + vtext + "'");
        if (!std::isfinite(v))
            throw DataError("line " + std::to_string(lineno) + ": non-finite value");
        ts.samples.push_back({t, v, false});
    }
    if (ts.samples.empty())
        throw DataError("empty body: no data rows");

    std::stable_sort(ts.samples.begin(), ts.samples.end(),
                     [](const Sample& a, const Sample& b) { return a.timestamp < b.timestamp; });

    const Instant step = cadence_step(cadence);
    for (std::size_t i = 1; i < ts.samples.size(); ++i) {
        const Instant gap = ts.samples[i].timestamp - ts.samples[i - 1].timestamp;
        if (gap == 0)
            throw DataError("duplicate timestamp " + format_instant(ts.samples[i].timestamp));
        if (gap % step != 0)
            throw DataError("timestamp " + format_instant(ts.samples[i].timestamp) +
                            " not aligned to " + cadence_name(cadence) + " cadence");
    }
    return ts;
}

void write_series(std::ostream& out, const TimeSeries& series) {
    out << "timestamp,value\n";
    char buf[40];
    for (const Sample& s : series.samples) {
        std::snprintf(buf, sizeof buf, "%.9g", s.value);
        out << format_instant(s.timestamp) << ',' << buf << '\n';
    }
}

TimeSeries aggregate_daily(const TimeSeries& hourly) {
    if (hourly.cadence != Cadence::Hourly)
        throw ConfigError("aggregate_daily requires an hourly series");

    // map keeps days ordered; input is already sorted so insertion is cheap
    std::map<Instant, std::pair<double, int>> days;
    for (const Sample& s : hourly.samples) {
        auto& acc = days[floor_to_day(s.timestamp)];
        acc.first += s.value;
        acc.second += 1;
    }

    TimeSeries daily;
    daily.cadence = Cadence::Daily;
    daily.label = hourly.label;
    daily.samples.reserve(days.size());
    for (const auto& [day, acc] : days)
        daily.samples.push_back({day, acc.first / acc.second, acc.second < 24});
    return daily;
}

TimeSeries slice_range(const TimeSeries& series, Instant start, Instant end) {
    if (start >= end)
        throw ConfigError("slice_range: start must precede end");
    TimeSeries out;
    out.cadence = series.cadence;
    out.label = series.label;
    for (const Sample& s : series.samples)
        if (s.timestamp >= start && s.timestamp < end)
            out.samples.push_back(s);
    if (out.samples.empty())
        throw DataError("slice_range: no samples in [" + format_instant(start) + ", " +
                        format_instant(end) + ")");
    return out;
}

std::vector<Gap> find_gaps(const TimeSeries& series) {
    std::vector<Gap> gaps;
    const Instant step = cadence_step(series.cadence);
    for (std::size_t i = 1; i < series.samples.size(); ++i) {
        const Instant prev = series.samples[i - 1].timestamp;
        const Instant cur = series.samples[i].timestamp;
        if (cur - prev > step)
            gaps.push_back({prev + step, cur, (cur - prev) / step - 1});
    }
    return gaps;
}

void write_gap_report(std::ostream& out, const std::vector<Gap>& gaps) {
    out << "gap_start,gap_end,missing_count\n";
    for (const Gap& g : gaps)
        out << format_instant(g.start) << ',' << format_instant(g.end) << ','
            << g.missing_count << '\n';
}

} // namespace tda
