#include "tda/landscape.hpp"

#include "tda/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tda {

Landscape build_landscape(const PersistenceDiagram& d, int k_max, const GridSpec& grid) {
    if (k_max < 1)
        throw ConfigError("k_max must be >= 1");
    if (grid.nodes < 2 || !(grid.min < grid.max))
        throw ConfigError("landscape grid needs at least 2 nodes and min < max");
    for (const PersistencePair& pr : d.pairs)
        if (!std::isfinite(pr.death))
            throw ConfigError("build_landscape: infinite pair present, pre-filter essentials");

    Landscape L;
    L.grid = grid;
    L.levels.assign(static_cast<std::size_t>(k_max),
                    std::vector<double>(static_cast<std::size_t>(grid.nodes), 0.0));

    std::vector<double> tents(d.pairs.size());
    for (int i = 0; i < grid.nodes; ++i) {
        const double t = grid.node(i);
        for (std::size_t j = 0; j < d.pairs.size(); ++j)
            tents[j] = std::max(0.0, std::min(t - d.pairs[j].birth, d.pairs[j].death - t));
        const int used = std::min<int>(k_max, static_cast<int>(tents.size()));
        std::partial_sort(tents.begin(), tents.begin() + used, tents.end(),
                          std::greater<double>());
        for (int k = 0; k < used; ++k)
            L.levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = tents[static_cast<std::size_t>(k)];
    }
    return L;
}

double landscape_norm(const Landscape& L, double p) {
    if (p < 1.0)
        throw ConfigError("landscape norm requires p >= 1");
    const double h = (L.grid.max - L.grid.min) / (L.grid.nodes - 1);
    double total = 0.0;
    for (const auto& level : L.levels) {
        double integral = 0.0;
        for (std::size_t i = 0; i + 1 < level.size(); ++i)
            integral += 0.5 * h * (std::pow(level[i], p) + std::pow(level[i + 1], p));
        total += integral;
    }
    return std::pow(total, 1.0 / p);
}

double total_persistence(const PersistenceDiagram& d, double p) {
    if (d.pairs.empty())
        return 0.0;
    if (std::isinf(p))
        return max_persistence(d);
    double total = 0.0;
    for (const PersistencePair& pr : d.pairs)
        total += std::pow(pr.persistence(), p);
    return std::pow(total, 1.0 / p);
}

int count_features(const PersistenceDiagram& d, double threshold) {
    int count = 0;
    for (const PersistencePair& pr : d.pairs)
        if (pr.persistence() > threshold)
            ++count;
    return count;
}

double max_persistence(const PersistenceDiagram& d) {
    double best = 0.0;
    for (const PersistencePair& pr : d.pairs)
        if (std::isfinite(pr.death))
            best = std::max(best, pr.persistence());
    return best;
}

} // namespace tda
