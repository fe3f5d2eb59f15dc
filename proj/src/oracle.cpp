#include "tda/oracle.hpp"

#include "tda/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace tda::validate {
namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

std::uint32_t low(const std::vector<std::uint32_t>& col) {
    return col.empty() ? kNone : col.back();
}

void add_column(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src) {
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                  std::back_inserter(out));
    dst.swap(out);
}

// Rank of a dense Z2 matrix given as rows x cols booleans.
int z2_rank(std::vector<std::vector<char>> m) {
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && !m[pivot][col])
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != row && m[r][col])
                for (std::size_t c = col; c < cols; ++c)
                    m[r][c] ^= m[row][c];
        ++row;
        ++rank;
    }
    return rank;
}

// Dense boundary matrix of dimension-q simplices restricted to weight <= r:
// one column per q-simplex, one row per (q-1)-simplex.
std::vector<std::vector<char>> restricted_boundary(const Filtration& f, double r, int q) {
    std::vector<std::uint32_t> row_ids, col_ids;
    for (std::uint32_t j = 0; j < f.simplices.size(); ++j) {
        if (f.simplices[j].weight > r)
            continue;
        if (f.simplices[j].dim() == q - 1)
            row_ids.push_back(j);
        else if (f.simplices[j].dim() == q)
            col_ids.push_back(j);
    }
    std::vector<std::uint32_t> row_pos(f.simplices.size(), kNone);
    for (std::uint32_t i = 0; i < row_ids.size(); ++i)
        row_pos[row_ids[i]] = i;

    // facet lookup by vertex set within the restriction
    std::vector<std::vector<char>> m(row_ids.size(),
                                     std::vector<char>(col_ids.size(), 0));
    BoundaryMatrix bm = boundary_matrix(f);
    for (std::uint32_t c = 0; c < col_ids.size(); ++c)
        for (std::uint32_t facet : bm.columns[col_ids[c]])
            m[row_pos[facet]][c] = 1;
    return m;
}

} // namespace

Pairing naive_reduce(const BoundaryMatrix& bm) {
    const std::size_t n = bm.size();
    std::vector<std::vector<std::uint32_t>> cols(bm.columns);

    Pairing result;
    std::vector<bool> is_birth(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
        while (!cols[j].empty()) {
            std::uint32_t k = kNone;
            for (std::uint32_t i = 0; i < j; ++i)
                if (!cols[i].empty() && low(cols[i]) == low(cols[j])) {
                    k = i;
                    break;
                }
            if (k == kNone)
                break;
            add_column(cols[j], cols[k]);
        }
        if (!cols[j].empty()) {
            result.pairs.emplace_back(low(cols[j]), j);
            is_birth[low(cols[j])] = true;
        }
    }
    for (std::uint32_t j = 0; j < n; ++j)
        if (cols[j].empty() && !is_birth[j])
            result.essential.push_back(j);

    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

RankResult betti_at(const Filtration& f, double r, int p) {
    if (p < 0 || p + 1 > f.max_dim)
        throw ConfigError("betti_at: dimension " + std::to_string(p) +
                          " out of range for max_dim " + std::to_string(f.max_dim));
    int num_p = 0;
    for (const Simplex& s : f.simplices)
        if (s.weight <= r && s.dim() == p)
            ++num_p;

    const int rank_dp = z2_rank(restricted_boundary(f, r, p));
    const int rank_dp1 = z2_rank(restricted_boundary(f, r, p + 1));

    RankResult res;
    res.p = p;
    res.rank_Z = num_p - rank_dp;
    res.rank_B = rank_dp1;
    res.betti = res.rank_Z - res.rank_B;
    return res;
}

bool chain_complex_check(const BoundaryMatrix& bm) {
    for (std::size_t j = 0; j < bm.size(); ++j) {
        std::vector<std::uint32_t> composite;
        for (std::uint32_t facet : bm.columns[j])
            add_column(composite, bm.columns[facet]);
        if (!composite.empty())
            return false;
    }
    return true;
}

} // namespace tda::validate
