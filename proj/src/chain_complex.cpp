#include "loopnerve/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loopnerve {

IntMatrix SparseMatrix::dense() const {
    IntMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : columns[c]) m(r, c) = v;
    }
    return m;
}

std::size_t ChainComplex::size(int d) const {
    if (d < 0 || d > top_dimension()) return 0;
    return bases[static_cast<std::size_t>(d)].size();
}

SparseMatrix ChainComplex::boundary(int d) const {
    if (d >= 1 && d <= top_dimension()) return boundaries[static_cast<std::size_t>(d)];
    SparseMatrix empty;
    empty.rows = size(d - 1);
    empty.cols = size(d);
    empty.columns.resize(empty.cols);
    return empty;
}

ChainComplex boundary_matrices(const NerveComplex& nerve, const SimplicialOrder& order) {
    ChainComplex cc;
    const int top = nerve.max_dimension();
    cc.bases.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    cc.boundaries.resize(cc.bases.size());
    for (int d = 0; d <= top; ++d) {
        auto& basis = cc.bases[static_cast<std::size_t>(d)];
        for (const Simplex& s : nerve.simplices(d)) basis.push_back(order.arrange(s.vertices));
    }
    for (int d = 1; d <= top; ++d) {
        SparseMatrix& m = cc.boundaries[static_cast<std::size_t>(d)];
        m.rows = nerve.count(d - 1);
        m.cols = nerve.count(d);
        m.columns.resize(m.cols);
        for (std::size_t c = 0; c < m.cols; ++c) {
            const auto& ordered = cc.bases[static_cast<std::size_t>(d)][c];
            auto faces = facets(ordered);
            for (std::size_t i = 0; i < faces.size(); ++i) {
                std::sort(faces[i].begin(), faces[i].end());
                const auto row = nerve.find(faces[i]);
                if (!row) throw std::logic_error("nerve is not closed under faces");
                m.columns[c].emplace_back(*row, i % 2 == 0 ? 1 : -1);
            }
            std::sort(m.columns[c].begin(), m.columns[c].end());
        }
    }
    return cc;
}

bool boundaries_compose_to_zero(const ChainComplex& cc) {
    for (int d = 1; d < cc.top_dimension(); ++d) {
        const SparseMatrix& lower = cc.boundaries[static_cast<std::size_t>(d)];
        const SparseMatrix& upper = cc.boundaries[static_cast<std::size_t>(d + 1)];
        for (const auto& column : upper.columns) {
            std::map<std::size_t, long> acc;
            for (const auto& [mid, coeff] : column) {
                for (const auto& [row, v] : lower.columns[mid]) acc[row] += static_cast<long>(coeff) * v;
            }
            for (const auto& [row, v] : acc) {
                if (v != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace loopnerve
