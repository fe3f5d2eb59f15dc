#pragma once

#include "tda/persistence.hpp"

namespace tda::validate {

struct RankResult {
    int p = 0;
    int rank_Z = 0;
    int rank_B = 0;
    int betti = 0;
};

/// Plain left-to-right column reduction, no optimizations. Same pairing
/// contract as tda::reduce; used only for cross-checking.
Pairing naive_reduce(const BoundaryMatrix& bm);

/// Betti number of the subcomplex at radius r via Z2 Gaussian elimination:
/// rank_Z = #p-simplices - rank(boundary_p), rank_B = rank(boundary_{p+1}).
RankResult betti_at(const Filtration& f, double r, int p);

/// True iff the composite boundary of every column vanishes over Z2.
bool chain_complex_check(const BoundaryMatrix& bm);

} // namespace tda::validate
