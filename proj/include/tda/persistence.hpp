#pragma once

#include "tda/rips.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace tda {

/// Z2 boundary matrix in filtration order. Column j holds the sorted
/// filtration indices of the facets of simplex j (empty for vertices).
struct BoundaryMatrix {
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<int> dims;
    std::vector<double> weights;

    std::size_t size() const { return columns.size(); }
};

BoundaryMatrix boundary_matrix(const Filtration& f);

/// Birth/death pairing from column reduction. `essential` lists unpaired
/// cycle columns (classes alive at the end of the filtration).
struct Pairing {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs; // (birth, death)
    std::vector<std::uint32_t> essential;

    bool operator==(const Pairing&) const = default;
};

/// Column reduction over Z2 with the clearing optimization (columns are
/// processed by decreasing dimension and paired births are zeroed). The
/// pairing is canonical, identical to the plain left-to-right reduction.
Pairing reduce(const BoundaryMatrix& bm);

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;
    std::uint32_t birth_index = 0;
    std::uint32_t death_index = 0; // meaningless when death is infinite

    double persistence() const { return death - birth; }
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<PersistencePair> pairs; // sorted by (birth, death)
};

/// Dimension-p pairs as (birth weight, death weight); zero-persistence pairs
/// dropped; essential classes kept with infinite death. Throws ConfigError
/// when p >= max_dim (deaths cannot be witnessed).
PersistenceDiagram extract_diagram(const Pairing& pairing, const BoundaryMatrix& bm,
                                   const Filtration& f, int p);

/// Convenience: full cloud -> H_p diagram at the given truncation.
PersistenceDiagram diagram_of_cloud(const PointCloud& cloud, int p, int max_dim,
                                    double r_max = 0.0 /* 0 = enclosing radius */);

} // namespace tda
