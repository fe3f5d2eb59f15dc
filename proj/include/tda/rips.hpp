#pragma once

#include "tda/embed.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tda {

/// Symmetric pairwise distances, zero diagonal, row-major n x n.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> entries;

    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

struct Simplex {
    std::vector<std::uint32_t> vertices; // strictly increasing
    double weight = 0.0;                 // max pairwise distance, 0 for vertices

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Simplices ordered by (weight, dim, lexicographic vertices); faces precede
/// cofaces.
struct Filtration {
    std::vector<Simplex> simplices;
    int max_dim = 2;
    double r_max = 0.0;
};

DistanceMatrix pairwise_distances(const PointCloud& cloud);

/// min over points of the max distance to any other point. Beyond this radius
/// the complex is a cone, so every H1 class has died.
double enclosing_radius(const DistanceMatrix& dm);

inline constexpr std::size_t kDefaultSimplexLimit = 20'000'000;

/// Every simplex on <= max_dim+1 vertices whose diameter is <= r_max.
/// Throws DataError if the simplex count would exceed `limit`.
Filtration build_vr_filtration(const DistanceMatrix& dm, int max_dim, double r_max,
                               std::size_t limit = kDefaultSimplexLimit);

} // namespace tda
