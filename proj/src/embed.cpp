#include "tda/embed.hpp"

#include "tda/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace tda {

void EmbeddingConfig::validate() const {
    if (m < 1 || tau < 1 || window < 1 || step < 1)
        throw ConfigError("embedding parameters must all be >= 1");
    if (window <= m * tau)
        throw ConfigError("window (" + std::to_string(window) + ") must exceed m*tau (" +
                          std::to_string(m * tau) + ")");
}

PointCloud sliding_window_embed(std::span<const double> values, const EmbeddingConfig& cfg,
                                std::size_t base_index, Instant base_date) {
    cfg.validate();
    if (values.size() != static_cast<std::size_t>(cfg.window))
        throw ConfigError("expected " + std::to_string(cfg.window) + " values, got " +
                          std::to_string(values.size()));
    for (double v : values)
        if (!std::isfinite(v))
            throw DataError("non-finite sample in window");

    PointCloud cloud;
    cloud.dim = static_cast<std::size_t>(cfg.point_dim());
    cloud.base_index = base_index;
    cloud.base_date = base_date;
    const int count = cfg.points_per_window();
    cloud.data.reserve(static_cast<std::size_t>(count) * cloud.dim);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j <= cfg.m; ++j)
            cloud.data.push_back(values[static_cast<std::size_t>(i + j * cfg.tau)]);
    return cloud;
}

std::vector<std::size_t> schedule_windows(std::size_t n, const EmbeddingConfig& cfg) {
    cfg.validate();
    std::vector<std::size_t> starts;
    const auto w = static_cast<std::size_t>(cfg.window);
    for (std::size_t s = 0; s + w <= n; s += static_cast<std::size_t>(cfg.step))
        starts.push_back(s);
    return starts;
}

std::vector<double> zscore_window(std::span<const double> values) {
    if (values.size() < 2)
        throw DataError("zscore_window needs at least 2 values");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    if (sd == 0.0)
        throw DataError("zscore_window: zero variance");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = (values[i] - mean) / sd;
    return out;
}

} // namespace tda
