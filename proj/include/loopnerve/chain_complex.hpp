#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "loopnerve/nerve.hpp"
#include "loopnerve/smith.hpp"

namespace loopnerve {

/// Column-major sparse matrix with small signed entries.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Per column: (row, value) sorted by row.
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    IntMatrix dense() const;
};

/// Integer chain complex of a nerve under a simplicial order. Basis
/// elements of C_d are index-aligned with nerve.simplices(d); each stores
/// its vertices arranged by the order.
struct ChainComplex {
    std::vector<std::vector<std::vector<LoopId>>> bases;
    /// boundaries[d] is D_d : C_d -> C_{d-1}; boundaries[0] is unused.
    std::vector<SparseMatrix> boundaries;

    int top_dimension() const { return static_cast<int>(bases.size()) - 1; }
    std::size_t size(int d) const;
    /// D_d, or an empty matrix of the right shape when d is out of range.
    SparseMatrix boundary(int d) const;
};

ChainComplex boundary_matrices(const NerveComplex& nerve, const SimplicialOrder& order);

/// True iff D_d * D_{d+1} == 0 for every consecutive pair.
bool boundaries_compose_to_zero(const ChainComplex& cc);

}  // namespace loopnerve
