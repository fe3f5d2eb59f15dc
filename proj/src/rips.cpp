#include "tda/rips.hpp"

#include "tda/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tda {

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n == 0)
        throw DataError("pairwise_distances: empty cloud");
    DistanceMatrix dm;
    dm.n = n;
    dm.entries.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pi = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto pj = cloud.point(j);
            double ss = 0.0;
            for (std::size_t k = 0; k < cloud.dim; ++k) {
                const double d = pi[k] - pj[k];
                ss += d * d;
            }
            const double dist = std::sqrt(ss);
            dm.at(i, j) = dist;
            dm.at(j, i) = dist;
        }
    }
    return dm;
}

double enclosing_radius(const DistanceMatrix& dm) {
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dm.n; ++i) {
        double farthest = 0.0;
        for (std::size_t j = 0; j < dm.n; ++j)
            farthest = std::max(farthest, dm.at(i, j));
        radius = std::min(radius, farthest);
    }
    return dm.n ? radius : 0.0;
}

namespace {

// Depth-first clique expansion: extend `current` by vertices greater than its
// last entry that are within r_max of every member.
void expand(const DistanceMatrix& dm, std::vector<std::uint32_t>& current, double weight,
            int max_dim, double r_max, std::size_t limit, std::vector<Simplex>& out) {
    if (out.size() >= limit)
        throw DataError("simplex limit exceeded (" + std::to_string(limit) +
                        "); reduce r_max or max_dim");
    out.push_back({current, weight});
    if (static_cast<int>(current.size()) - 1 >= max_dim)
        return;
    for (std::uint32_t v = current.back() + 1; v < dm.n; ++v) {
        double w = weight;
        bool ok = true;
        for (std::uint32_t u : current) {
            const double d = dm.at(u, v);
            if (d > r_max) {
                ok = false;
                break;
            }
            w = std::max(w, d);
        }
        if (!ok)
            continue;
        current.push_back(v);
        expand(dm, current, w, max_dim, r_max, limit, out);
        current.pop_back();
    }
}

} // namespace

Filtration build_vr_filtration(const DistanceMatrix& dm, int max_dim, double r_max,
                               std::size_t limit) {
    if (max_dim < 1)
        throw ConfigError("max_dim must be >= 1");
    if (!(r_max > 0.0))
        throw ConfigError("r_max must be positive");

    Filtration f;
    f.max_dim = max_dim;
    f.r_max = r_max;
    std::vector<std::uint32_t> current;
    for (std::uint32_t v = 0; v < dm.n; ++v) {
        current.assign(1, v);
        expand(dm, current, 0.0, max_dim, r_max, limit, f.simplices);
    }

    std::sort(f.simplices.begin(), f.simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return f;
}

} // namespace tda
