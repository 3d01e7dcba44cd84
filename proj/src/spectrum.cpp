#include "loopnerve/spectrum.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "loopnerve/chain_complex.hpp"
#include "loopnerve/homology.hpp"

namespace loopnerve {

std::vector<std::size_t> level_betti(const NerveComplex& nerve, int t) {
    const NerveComplex level = nerve.filtered(t);
    HomologyResult h = compute_homology(boundary_matrices(level, SimplicialOrder::post_order(level)));
    h.betti.resize(4);
    return h.betti;
}

std::vector<Bar> persistence_bars(const NerveComplex& nerve) {
    struct Entry {
        int weight;
        int dim;
        std::size_t index;
    };
    std::vector<Entry> order;
    for (int d = 0; d <= nerve.max_dimension(); ++d) {
        const auto& k = nerve.simplices(d);
        for (std::size_t i = 0; i < k.size(); ++i) order.push_back(Entry{k[i].weight(), d, i});
    }
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        return std::tuple(-a.weight, a.dim, a.index) < std::tuple(-b.weight, b.dim, b.index);
    });

    std::vector<std::vector<std::size_t>> position(static_cast<std::size_t>(nerve.max_dimension() + 1));
    for (int d = 0; d <= nerve.max_dimension(); ++d) position[static_cast<std::size_t>(d)].resize(nerve.count(d));
    for (std::size_t p = 0; p < order.size(); ++p) {
        position[static_cast<std::size_t>(order[p].dim)][order[p].index] = p;
    }

    // Columns hold filtration positions of faces, ascending; low = back().
    std::vector<std::vector<std::size_t>> columns(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        const Entry& e = order[p];
        if (e.dim == 0) continue;
        const auto& s = nerve.simplices(e.dim)[e.index];
        for (const auto& face : facets(s.vertices)) {
            columns[p].push_back(position[static_cast<std::size_t>(e.dim - 1)][*nerve.find(face)]);
        }
        std::sort(columns[p].begin(), columns[p].end());
    }

    const std::size_t none = order.size();
    std::vector<std::size_t> low_owner(order.size(), none);
    std::vector<bool> paired(order.size(), false);
    std::vector<Bar> bars;
    for (std::size_t p = 0; p < order.size(); ++p) {
        auto& col = columns[p];
        while (!col.empty() && low_owner[col.back()] != none) {
            const auto& other = columns[low_owner[col.back()]];
            std::vector<std::size_t> sum;
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(sum));
            col = std::move(sum);
        }
        if (col.empty()) continue;
        const std::size_t birth = col.back();
        low_owner[birth] = p;
        paired[birth] = paired[p] = true;
        if (order[birth].weight != order[p].weight) {
            bars.push_back(Bar{order[birth].dim, order[birth].weight, order[p].weight});
        }
    }
    for (std::size_t p = 0; p < order.size(); ++p) {
        if (!paired[p]) bars.push_back(Bar{order[p].dim, order[p].weight, 0});
    }
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        return std::tuple(a.dim, -a.birth, -a.death) < std::tuple(b.dim, -b.birth, -b.death);
    });
    return bars;
}

std::vector<std::size_t> betti_from_bars(const std::vector<Bar>& bars, int t) {
    std::vector<std::size_t> betti(4, 0);
    for (const Bar& b : bars) {
        if (b.death < t && t <= b.birth) {
            if (static_cast<std::size_t>(b.dim) >= betti.size()) betti.resize(static_cast<std::size_t>(b.dim) + 1);
            ++betti[static_cast<std::size_t>(b.dim)];
        }
    }
    return betti;
}

FilteredHomology persistence_spectrum(const NerveComplex& nerve) {
    FilteredHomology out;
    std::set<int> weights;
    for (int d = 0; d <= nerve.max_dimension(); ++d) {
        for (const Simplex& s : nerve.simplices(d)) weights.insert(s.weight());
    }
    out.max_weight = weights.empty() ? 0 : *weights.rbegin();
    out.bars = persistence_bars(nerve);

    // K^t only changes at simplex weights: for prev < t <= w, K^t = K^w.
    int prev = 0;
    for (int w : weights) {
        const auto betti = level_betti(nerve, w);
        for (int t = prev + 1; t <= w; ++t) out.levels[t] = betti;
        prev = w;
    }
    for (const auto& [t, betti] : out.levels) {
        if (betti_from_bars(out.bars, t) != betti) out.disagreeing_levels.push_back(t);
    }
    return out;
}

}  // namespace loopnerve
