#pragma once

#include "tda/persistence.hpp"

#include <vector>

namespace tda {

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int nodes = 512;

    double node(int i) const {
        return min + (max - min) * static_cast<double>(i) / (nodes - 1);
    }
};

/// Piecewise-linear landscape levels lambda_1 >= lambda_2 >= ... sampled on a
/// uniform grid.
struct Landscape {
    GridSpec grid;
    std::vector<std::vector<double>> levels; // levels[k][i], k_max x nodes
};

/// lambda_k(t) = k-th largest of max(0, min(t - b_i, d_i - t)) over diagram
/// pairs. All pairs must be finite. Levels beyond the diagram size are zero.
Landscape build_landscape(const PersistenceDiagram& d, int k_max, const GridSpec& grid);

/// (sum_k integral lambda_k^p dt)^(1/p), trapezoid rule on the grid. p >= 1.
double landscape_norm(const Landscape& L, double p);

/// (sum (d_i - b_i)^p)^(1/p); p = infinity returns the max persistence.
double total_persistence(const PersistenceDiagram& d, double p);

/// Number of pairs with persistence strictly above the threshold.
int count_features(const PersistenceDiagram& d, double threshold);

/// Max persistence over finite pairs, 0 for an empty diagram.
double max_persistence(const PersistenceDiagram& d);

} // namespace tda
