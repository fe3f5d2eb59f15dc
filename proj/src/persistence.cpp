#include "tda/persistence.hpp"

#include "tda/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tda {

BoundaryMatrix boundary_matrix(const Filtration& f) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> index_of;
    for (std::uint32_t j = 0; j < f.simplices.size(); ++j)
        index_of.emplace(f.simplices[j].vertices, j);

    BoundaryMatrix bm;
    bm.columns.resize(f.simplices.size());
    bm.dims.resize(f.simplices.size());
    bm.weights.resize(f.simplices.size());
    std::vector<std::uint32_t> facet;
    for (std::uint32_t j = 0; j < f.simplices.size(); ++j) {
        const Simplex& s = f.simplices[j];
        bm.dims[j] = s.dim();
        bm.weights[j] = s.weight;
        if (s.dim() == 0)
            continue;
        auto& col = bm.columns[j];
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            facet.clear();
            for (std::size_t k = 0; k < s.vertices.size(); ++k)
                if (k != drop)
                    facet.push_back(s.vertices[k]);
            const auto it = index_of.find(facet);
            if (it == index_of.end() || it->second >= j)
                throw DataError("malformed filtration: facet missing or out of order");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
    }
    return bm;
}

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

// Symmetric difference of two sorted index sets (Z2 column addition).
void add_column(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src) {
    std::vector<std::uint32_t> out;
    out.reserve(dst.size() + src.size());
    std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                  std::back_inserter(out));
    dst.swap(out);
}

} // namespace

Pairing reduce(const BoundaryMatrix& bm) {
    const std::size_t n = bm.size();
    std::vector<std::vector<std::uint32_t>> cols(bm.columns);
    std::vector<std::uint32_t> pivot_owner(n, kNone); // low row -> reduced column

    int max_dim = 0;
    for (int d : bm.dims)
        max_dim = std::max(max_dim, d);

    Pairing result;
    std::vector<bool> is_birth(n, false);
    for (int dim = max_dim; dim >= 1; --dim) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (bm.dims[j] != dim)
                continue;
            auto& col = cols[j];
            if (is_birth[j]) { // cleared by a higher-dimensional pairing
                col.clear();
                continue;
            }
            while (!col.empty()) {
                const std::uint32_t low = col.back();
                const std::uint32_t owner = pivot_owner[low];
                if (owner == kNone)
                    break;
                add_column(col, cols[owner]);
            }
            if (!col.empty()) {
                const std::uint32_t low = col.back();
                pivot_owner[low] = j;
                is_birth[low] = true;
                result.pairs.emplace_back(low, j);
            }
        }
    }

    for (std::uint32_t j = 0; j < n; ++j)
        if (cols[j].empty() && !is_birth[j])
            result.essential.push_back(j);

    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

PersistenceDiagram extract_diagram(const Pairing& pairing, const BoundaryMatrix& bm,
                                   const Filtration& f, int p) {
    if (p < 0 || p >= f.max_dim)
        throw ConfigError("homology dimension " + std::to_string(p) +
                          " out of range for max_dim " + std::to_string(f.max_dim));
    PersistenceDiagram d;
    d.dim = p;
    for (const auto& [b, dth] : pairing.pairs) {
        if (bm.dims[b] != p)
            continue;
        const double birth = bm.weights[b];
        const double death = bm.weights[dth];
        if (birth == death)
            continue; // zero persistence
        d.pairs.push_back({p, birth, death, b, dth});
    }
    for (std::uint32_t e : pairing.essential)
        if (bm.dims[e] == p)
            d.pairs.push_back({p, bm.weights[e], kInfiniteDeath, e, 0});

    std::sort(d.pairs.begin(), d.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        if (a.birth != b.birth)
            return a.birth < b.birth;
        return a.death < b.death;
    });
    return d;
}

PersistenceDiagram diagram_of_cloud(const PointCloud& cloud, int p, int max_dim, double r_max) {
    const DistanceMatrix dm = pairwise_distances(cloud);
    if (r_max <= 0.0)
        r_max = enclosing_radius(dm);
    if (r_max <= 0.0)
        r_max = 1.0; // degenerate cloud (all points identical)
    const Filtration f = build_vr_filtration(dm, max_dim, r_max);
    const BoundaryMatrix bm = boundary_matrix(f);
    return extract_diagram(reduce(bm), bm, f, p);
}

} // namespace tda
