#include <doctest.h>

#include <random>
#include <set>

#include "loopnerve/oracle.hpp"
#include "loopnerve/sampler.hpp"
#include "support.hpp"

using namespace loopnerve;
using testing::ids;
using testing::pair_of;

namespace {

ChainComplex projective_like() {
    // One cell per dimension with D2 = [2]: H1 is Z/2.
    ChainComplex cc;
    cc.bases = {{ids({0})}, {ids({0, 1})}, {ids({0, 1, 2})}};
    cc.boundaries.resize(3);
    cc.boundaries[1] = SparseMatrix{1, 1, {{}}};
    cc.boundaries[2] = SparseMatrix{1, 1, {{{0, 2}}}};
    return cc;
}

/// Independence of the generators modulo Im(D3): rank [D3 | G] = rank D3 + |G|.
bool independent_modulo_boundaries(const ChainComplex& cc, const std::vector<Chain>& gens) {
    const IntMatrix d3 = cc.boundary(3).dense();
    IntMatrix g(cc.size(2), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (const auto& [row, c] : gens[j].terms) g(row, j) = c;
    }
    return oracle::rational_rank(d3.hconcat(g)) == oracle::rational_rank(d3) + gens.size();
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("boundary matrices of the empty pair") {
    const NerveComplex k = build_nerve(pair_of("....", "...."));
    const ChainComplex cc = boundary_matrices(k, simplicial_order(k));
    const IntMatrix d1 = cc.boundary(1).dense();
    CHECK(d1 == IntMatrix{{-1}, {1}});
    const HomologyResult h = homology(cc);
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(h.h2_generators.empty());
    CHECK(euler_characteristic(k) == 1);
    for (const auto& t : h.torsion) CHECK(t.empty());
    CHECK(generator_support(Chain{}, k).empty());
}

TEST_CASE("boundary of a 2-simplex follows the alternating face formula") {
    const NerveComplex k = build_nerve(testing::tetrahedron());
    const SimplicialOrder order = simplicial_order(k);
    const ChainComplex cc = boundary_matrices(k, order);
    const SparseMatrix d2 = cc.boundary(2);
    CHECK(d2.rows == 6);
    CHECK(d2.cols == 4);
    for (std::size_t j = 0; j < d2.cols; ++j) {
        const auto& r = cc.bases[2][j];
        REQUIRE(d2.columns[j].size() == 3);
        const std::vector<std::vector<LoopId>> faces{{r[1], r[2]}, {r[0], r[2]}, {r[0], r[1]}};
        const int signs[] = {1, -1, 1};
        for (int i = 0; i < 3; ++i) {
            std::vector<LoopId> sorted = faces[static_cast<std::size_t>(i)];
            std::sort(sorted.begin(), sorted.end());
            const std::size_t row = *k.find(sorted);
            const auto it = std::find_if(d2.columns[j].begin(), d2.columns[j].end(),
                                         [&](const auto& e) { return e.first == row; });
            REQUIRE(it != d2.columns[j].end());
            CHECK(it->second == signs[i]);
        }
    }
    CHECK((cc.boundary(1).dense() * cc.boundary(2).dense()).is_zero());
    CHECK(boundaries_compose_to_zero(cc));
}

TEST_CASE("crossing pair: one generator over all four triangles") {
    const NerveComplex k = build_nerve(testing::tetrahedron());
    const ChainComplex cc = boundary_matrices(k, simplicial_order(k));
    const HomologyResult h = homology(cc);
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(h.h2_rank() == 1);
    CHECK(h.euler == 2);
    CHECK(euler_characteristic(k) == 2);
    REQUIRE(h.h2_generators.size() == 1);
    const Chain& g = h.h2_generators[0];
    CHECK(g.terms.size() == 4);
    for (const auto& [idx, c] : g.terms) CHECK(abs(c) == 1);
    for (const BigInt& x : apply_boundary(cc.boundary(2), g)) CHECK(x == 0);

    const SupportReport support = generator_support(g, k);
    REQUIRE(support.s_loops.size() == 2);
    REQUIRE(support.t_loops.size() == 2);
    CHECK(support.s_loops[0].max_arc == Arc{1, 3});
    CHECK(support.s_loops[1].max_arc == Arc{0, 5});
    CHECK(support.t_loops[0].max_arc == Arc{2, 4});
    CHECK(support.t_loops[1].max_arc == Arc{0, 5});

    const auto rational = oracle::rational_betti(cc);
    CHECK(rational == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("torsion is detected and rejected") {
    const ChainComplex cc = projective_like();
    const HomologyResult h = compute_homology(cc);
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
    CHECK(h.betti[1] == 0);
    try {
        homology(cc);
        FAIL("expected a theorem violation");
    } catch (const TheoremViolation& e) {
        CHECK(e.dimension() == 1);
    }
}

TEST_CASE("T without arcs: the nerve is a cone, so b1 = b2 = 0") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 20)(rng);
        const NerveComplex k = build_nerve(BiSecondaryStructure(testing::random_structure(n, rng),
                                                                SecondaryStructure::empty(n)));
        const ChainComplex cc = boundary_matrices(k, simplicial_order(k));
        const HomologyResult h = homology(cc);
        CHECK(h.betti[1] == 0);
        CHECK(h.betti[2] == 0);
        CHECK(oracle::rational_betti(cc) == std::vector<std::size_t>(h.betti.begin(), h.betti.begin() + 4));
    }
}

TEST_CASE("riboswitch-style pair: both helices carry the generator") {
    const NerveComplex k =
        build_nerve(pair_of("((((((......))))))......", "......((((((......))))))"));
    const HomologyResult h = testing::full_homology(k);
    CHECK(h.h2_rank() == 1);
    REQUIRE(h.h2_generators.size() == 1);
    const SupportReport support = generator_support(h.h2_generators[0], k);
    std::set<Arc> s_arcs;
    std::set<Arc> t_arcs;
    for (const auto& e : support.s_loops) s_arcs.insert(e.max_arc);
    for (const auto& e : support.t_loops) t_arcs.insert(e.max_arc);
    CHECK(s_arcs.count(Arc{0, 25}) == 1);
    CHECK(t_arcs.count(Arc{0, 25}) == 1);
    CHECK(s_arcs.count(Arc{6, 13}) == 1);
    CHECK(t_arcs.count(Arc{12, 19}) == 1);
}

TEST_CASE("property: homology theorems, Euler relation and generators on sampled pairs") {
    for (int n : {8, 15, 30}) {
        const UniformSampler sampler(n, 0);
        for (std::uint64_t i = 0; i < 60; ++i) {
            const NerveComplex k = build_nerve(sample_pair(sampler, 1234, i));
            const SimplicialOrder order = simplicial_order(k);
            const ChainComplex cc = boundary_matrices(k, order);
            CHECK(boundaries_compose_to_zero(cc));
            const HomologyResult h = homology(cc);
            CHECK(h.betti[0] == 1);
            CHECK(h.betti[1] == 0);
            CHECK(h.betti[3] == 0);
            CHECK(static_cast<long>(h.betti[2]) == euler_characteristic(k) - 1);
            CHECK(h.h2_generators.size() == h.betti[2]);
            for (const Chain& g : h.h2_generators) {
                for (const BigInt& x : apply_boundary(cc.boundary(2), g)) CHECK(x == 0);
                CHECK(g.terms.front().second > 0);
            }
            CHECK(independent_modulo_boundaries(cc, h.h2_generators));
            CHECK(oracle::rational_betti(cc) == std::vector<std::size_t>(h.betti.begin(), h.betti.begin() + 4));

            for (const SimplicialOrder& alt : {SimplicialOrder::post_order(k, SiblingOrder::RightToLeft),
                                               SimplicialOrder::random_extension(k, i)}) {
                const HomologyResult other = homology(boundary_matrices(k, alt));
                CHECK(other.betti == h.betti);
            }
        }
    }
}

}  // TEST_SUITE
