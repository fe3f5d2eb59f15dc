#pragma once

#include "tda/time.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tda {

/// Sliding-window delay embedding parameters. A point has dimension m+1;
/// a window of w samples yields w - m*tau points.
struct EmbeddingConfig {
    int m = 7;
    int tau = 1;
    int window = 30;
    int step = 1;
    bool zscore = false;

    int point_dim() const { return m + 1; }
    int points_per_window() const { return window - m * tau; }

    /// Throws ConfigError unless all fields >= 1 and window > m*tau.
    void validate() const;
};

/// Point cloud from one analysis window, points stored row-major.
struct PointCloud {
    std::size_t dim = 0;
    std::vector<double> data;
    std::size_t base_index = 0;
    Instant base_date = 0;

    std::size_t size() const { return dim ? data.size() / dim : 0; }
    std::span<const double> point(std::size_t i) const {
        return {data.data() + i * dim, dim};
    }
};

/// Point i = (values[i], values[i+tau], ..., values[i+m*tau]).
PointCloud sliding_window_embed(std::span<const double> values, const EmbeddingConfig& cfg,
                                std::size_t base_index = 0, Instant base_date = 0);

/// Window start indices 0, step, 2*step, ... while start + window <= n.
std::vector<std::size_t> schedule_windows(std::size_t n, const EmbeddingConfig& cfg);

/// Center to mean 0 and scale to sample standard deviation 1.
/// Throws DataError on zero variance or length < 2.
std::vector<double> zscore_window(std::span<const double> values);

} // namespace tda
