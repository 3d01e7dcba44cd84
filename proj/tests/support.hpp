#pragma once

#include <random>
#include <string>
#include <vector>

#include "loopnerve/homology.hpp"
#include "loopnerve/nerve.hpp"
#include "loopnerve/oracle.hpp"
#include "loopnerve/smith.hpp"
#include "loopnerve/structures.hpp"

namespace testing {

using namespace loopnerve;

inline BiSecondaryStructure pair_of(const std::string& s, const std::string& t) {
    return BiSecondaryStructure(parse_dot_bracket(s), parse_dot_bracket(t));
}

inline BiSecondaryStructure tetrahedron() { return pair_of("(.).", ".(.)"); }

/// Every dot-bracket string of length n whose arcs enclose at least
/// min_gap positions, built by a left-to-right bracket automaton.
inline std::vector<std::string> enumerate_dot_brackets(int n, int min_gap) {
    std::vector<std::string> out;
    std::string cur;
    std::vector<int> open;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (open.empty()) out.push_back(cur);
            return;
        }
        if (static_cast<int>(open.size()) > n - i) return;
        cur.push_back('.');
        self(self, i + 1);
        cur.back() = '(';
        open.push_back(i);
        self(self, i + 1);
        open.pop_back();
        if (!open.empty() && i - open.back() - 1 >= min_gap) {
            const int top = open.back();
            open.pop_back();
            cur.back() = ')';
            self(self, i + 1);
            open.push_back(top);
        }
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

/// Random non-crossing structure by rejection of random candidate arcs.
/// Not uniform; it reaches shapes the uniform sampler rarely produces.
inline SecondaryStructure random_structure(int n, std::mt19937& rng, int attempts = -1) {
    if (n < 2) return SecondaryStructure::empty(n);
    std::vector<Arc> arcs;
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    std::uniform_int_distribution<int> pos(1, n);
    if (attempts < 0) attempts = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int a = 0; a < attempts; ++a) {
        int i = pos(rng);
        int j = pos(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        if (partner[static_cast<std::size_t>(i)] || partner[static_cast<std::size_t>(j)]) continue;
        bool crosses = false;
        for (const Arc& b : arcs) {
            if ((b.start < i && i < b.end && b.end < j) || (i < b.start && b.start < j && j < b.end)) {
                crosses = true;
                break;
            }
        }
        if (crosses) continue;
        arcs.push_back(Arc{i, j});
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }
    return validate_arcs(n, arcs);
}

inline BiSecondaryStructure random_pair(int n, std::mt19937& rng) {
    SecondaryStructure s = random_structure(n, rng);
    return BiSecondaryStructure(s, random_structure(n, rng));
}

/// Fraction-free Gaussian elimination.
inline BigInt bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return n == 0 ? BigInt(1) : sign * m(n - 1, n - 1);
}

inline HomologyResult full_homology(const NerveComplex& nerve) {
    return homology(boundary_matrices(nerve, simplicial_order(nerve)));
}

inline std::vector<LoopId> ids(std::initializer_list<std::uint32_t> values) {
    std::vector<LoopId> out;
    for (auto v : values) out.push_back(LoopId{v});
    return out;
}

}  // namespace testing
