#include "loopnerve/homology.hpp"

#include <algorithm>
#include <sstream>

namespace loopnerve {

TheoremViolation::TheoremViolation(int dimension, std::vector<std::size_t> ranks,
                                   const std::string& what)
    : std::runtime_error(what), dimension_(dimension), ranks_(std::move(ranks)) {}

namespace {

BigInt l1_norm(const std::vector<BigInt>& v) {
    BigInt total = 0;
    for (const BigInt& x : v) total += abs(x);
    return total;
}

Chain to_chain(const std::vector<BigInt>& dense) {
    Chain c;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!dense[i].is_zero()) c.terms.emplace_back(i, dense[i]);
    }
    return c;
}

// Greedy descent in the l1 norm over g + Im(D_3), then a positive leading
// coefficient.
std::vector<BigInt> reduce_modulo_image(std::vector<BigInt> g, const SparseMatrix& d3) {
    BigInt norm = l1_norm(g);
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& column : d3.columns) {
            for (int sign : {1, -1}) {
                BigInt delta = 0;
                for (const auto& [row, v] : column) {
                    const BigInt& old = g[row];
                    delta += abs(old + sign * v) - abs(old);
                }
                if (delta < 0) {
                    for (const auto& [row, v] : column) g[row] += sign * v;
                    norm += delta;
                    improved = true;
                }
            }
        }
    }
    auto lead = std::find_if(g.begin(), g.end(), [](const BigInt& x) { return !x.is_zero(); });
    if (lead != g.end() && *lead < 0) {
        for (BigInt& x : g) x = -x;
    }
    return g;
}

std::string rank_text(const std::vector<std::size_t>& ranks) {
    std::ostringstream os;
    os << "ranks(D1..)=(";
    for (std::size_t d = 1; d < ranks.size(); ++d) os << (d > 1 ? "," : "") << ranks[d];
    os << ')';
    return os.str();
}

}  // namespace

std::vector<BigInt> apply_boundary(const SparseMatrix& d, const Chain& g) {
    std::vector<BigInt> out(d.rows);
    for (const auto& [col, coeff] : g.terms) {
        for (const auto& [row, v] : d.columns.at(col)) out[row] += coeff * v;
    }
    return out;
}

HomologyResult compute_homology(const ChainComplex& cc, bool with_generators) {
    const int top = cc.top_dimension();
    const std::size_t dims = static_cast<std::size_t>(std::max(top + 1, 4));
    HomologyResult h;
    h.ranks.assign(dims + 1, 0);
    h.betti.assign(dims, 0);
    h.torsion.assign(dims, {});

    for (int d = 1; d <= top; ++d) {
        const SmithForm snf = smith_normal_form(cc.boundary(d).dense(), false);
        h.ranks[static_cast<std::size_t>(d)] = snf.rank;
        for (const BigInt& f : snf.diag) {
            if (f > 1) h.torsion[static_cast<std::size_t>(d - 1)].push_back(f);
        }
    }
    for (std::size_t d = 0; d < dims; ++d) {
        const std::size_t cycles = cc.size(static_cast<int>(d)) - h.ranks[d];
        h.betti[d] = cycles - h.ranks[d + 1];
        h.euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(cc.size(static_cast<int>(d)));
    }
    if (with_generators) h.h2_generators = h2_generators(cc);
    return h;
}

HomologyResult homology(const ChainComplex& cc) {
    HomologyResult h = compute_homology(cc, true);
    auto violation = [&](int d, const std::string& what) {
        throw TheoremViolation(d, h.ranks, what + " " + rank_text(h.ranks));
    };
    if (cc.top_dimension() > 3) {
        violation(cc.top_dimension(), "nerve has simplices of dimension " +
                                          std::to_string(cc.top_dimension()));
    }
    if (h.betti[0] != 1) violation(0, "b0 = " + std::to_string(h.betti[0]) + ", expected 1");
    if (h.betti[1] != 0) violation(1, "b1 = " + std::to_string(h.betti[1]) + ", expected 0");
    if (h.betti[3] != 0) violation(3, "b3 = " + std::to_string(h.betti[3]) + ", expected 0");
    for (std::size_t d = 0; d < h.torsion.size(); ++d) {
        if (!h.torsion[d].empty()) {
            violation(static_cast<int>(d), "torsion in H" + std::to_string(d) + " with factor " +
                                               h.torsion[d].front().str());
        }
    }
    long alternating = 0;
    for (std::size_t d = 0; d < h.betti.size(); ++d) {
        alternating += (d % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti[d]);
    }
    if (alternating != h.euler) violation(2, "Euler characteristic disagrees with Betti numbers");
    if (h.h2_generators.size() != h.betti[2]) {
        violation(2, "found " + std::to_string(h.h2_generators.size()) + " H2 generators for b2 = " +
                         std::to_string(h.betti[2]));
    }
    return h;
}

std::vector<Chain> h2_generators(const ChainComplex& cc) {
    const std::size_t n2 = cc.size(2);
    if (n2 == 0) return {};
    const SmithForm snf2 = smith_normal_form(cc.boundary(2).dense(), true);
    const std::size_t r2 = snf2.rank;
    if (r2 == n2) return {};

    // Columns r2.. of V span Ker(D_2).
    IntMatrix kernel = snf2.V.column_range(r2, n2);
    std::size_t first_free = 0;
    const SparseMatrix d3 = cc.boundary(3);
    if (d3.cols > 0) {
        // D_3 = kernel * X since Im(D_3) lies in Ker(D_2).
        const IntMatrix in_v_basis = snf2.V_inv * d3.dense();
        if (!in_v_basis.row_range(0, r2).is_zero()) {
            throw std::logic_error("image of D3 is not contained in the kernel of D2");
        }
        const SmithForm snfx = smith_normal_form(in_v_basis.row_range(r2, n2), true);
        kernel = kernel * snfx.U_inv;
        first_free = snfx.rank;
    }

    std::vector<Chain> gens;
    for (std::size_t j = first_free; j < kernel.cols(); ++j) {
        std::vector<BigInt> g(n2);
        for (std::size_t i = 0; i < n2; ++i) g[i] = kernel(i, j);
        gens.push_back(to_chain(reduce_modulo_image(std::move(g), d3)));
    }
    return gens;
}

SupportReport generator_support(const Chain& g, const NerveComplex& nerve) {
    std::vector<LoopId> ids;
    for (const auto& [index, coeff] : g.terms) {
        const auto& v = nerve.simplices(2).at(index).vertices;
        ids.insert(ids.end(), v.begin(), v.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    SupportReport report;
    for (LoopId id : ids) {
        const Loop& l = nerve.loop(id);
        SupportEntry e{id, l.owner, l.max_arc};
        (l.owner == Owner::S ? report.s_loops : report.t_loops).push_back(e);
    }
    return report;
}

long euler_characteristic(const NerveComplex& nerve) {
    long chi = 0;
    for (int d = 0; d <= nerve.max_dimension(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(nerve.count(d));
    }
    return chi;
}

}  // namespace loopnerve
