#include "loopnerve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopnerve::oracle {

using Rational = boost::multiprecision::cpp_rational;

std::vector<int> naive_loop_vertices(const SecondaryStructure& s, Arc arc) {
    std::vector<Arc> all = s.arcs();
    all.push_back(s.rainbow());
    std::vector<int> out;
    for (int v = arc.start; v <= arc.end; ++v) {
        bool hidden = false;
        for (const Arc& b : all) {
            const bool nested = arc.start < b.start && b.end < arc.end;
            if (nested && b.start < v && v < b.end) {
                hidden = true;
                break;
            }
        }
        if (!hidden) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<OracleSimplex>> brute_force_nerve(const NerveComplex& nerve, std::size_t max_size) {
    const BiSecondaryStructure& r = nerve.structure();
    std::vector<std::vector<int>> sets(nerve.loop_count());
    for (std::size_t i = 0; i < nerve.loop_count(); ++i) {
        const Loop& l = nerve.loops()[i].loop;
        sets[i] = naive_loop_vertices(r.get(l.owner), l.max_arc);
    }

    std::vector<std::vector<OracleSimplex>> strata;
    std::vector<LoopId> chosen;
    // Supersets of a subset with empty intersection are never simplices.
    std::function<void(std::size_t, const std::vector<int>&)> extend = [&](std::size_t next,
                                                                          const std::vector<int>& common) {
        for (std::size_t i = next; i < sets.size(); ++i) {
            std::vector<int> meet;
            if (chosen.empty()) {
                meet = sets[i];
            } else {
                std::set_intersection(common.begin(), common.end(), sets[i].begin(), sets[i].end(),
                                      std::back_inserter(meet));
            }
            if (meet.empty()) continue;
            chosen.push_back(LoopId{static_cast<std::uint32_t>(i)});
            if (strata.size() < chosen.size()) strata.resize(chosen.size());
            strata[chosen.size() - 1].push_back(OracleSimplex{chosen, meet});
            if (chosen.size() < max_size) extend(i + 1, meet);
            chosen.pop_back();
        }
    };
    extend(0, {});
    for (auto& stratum : strata) {
        std::sort(stratum.begin(), stratum.end(),
                  [](const OracleSimplex& a, const OracleSimplex& b) { return a.vertices < b.vertices; });
    }
    return strata;
}

std::string compare_with_brute_force(const NerveComplex& nerve) {
    const auto expected = brute_force_nerve(nerve);
    std::ostringstream os;
    const int dims = std::max(static_cast<int>(expected.size()), nerve.max_dimension() + 1);
    for (int d = 0; d < dims; ++d) {
        const auto& got = nerve.simplices(d);
        const std::size_t want = static_cast<std::size_t>(d) < expected.size() ? expected[static_cast<std::size_t>(d)].size() : 0;
        if (got.size() != want) {
            os << "K_" << d << " has " << got.size() << " simplices, brute force finds " << want;
            return os.str();
        }
        for (std::size_t i = 0; i < got.size(); ++i) {
            const OracleSimplex& e = expected[static_cast<std::size_t>(d)][i];
            if (got[i].vertices != e.vertices || got[i].intersection != e.intersection) {
                os << "K_" << d << " differs at position " << i << " (weight " << got[i].weight()
                   << " vs " << e.intersection.size() << ")";
                return os.str();
            }
        }
    }
    return {};
}

std::size_t rational_rank(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> rational_betti(const ChainComplex& cc) {
    const int top = std::max(cc.top_dimension(), 3);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= cc.top_dimension(); ++d) ranks[static_cast<std::size_t>(d)] = rational_rank(cc.boundary(d).dense());
    std::vector<std::size_t> betti(4);
    for (std::size_t d = 0; d < 4; ++d) betti[d] = cc.size(static_cast<int>(d)) - ranks[d] - ranks[d + 1];
    return betti;
}

}  // namespace loopnerve::oracle
