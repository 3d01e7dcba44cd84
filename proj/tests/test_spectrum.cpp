#include <doctest.h>

#include <random>

#include "loopnerve/oracle.hpp"
#include "loopnerve/sampler.hpp"
#include "loopnerve/spectrum.hpp"
#include "support.hpp"

using namespace loopnerve;
using testing::pair_of;

namespace {

using Betti = std::vector<std::size_t>;

/// Per-level Betti numbers by rational elimination on the filtered complex.
Betti rational_level(const NerveComplex& k, int t) {
    const NerveComplex sub = k.filtered(t);
    return oracle::rational_betti(boundary_matrices(sub, simplicial_order(sub)));
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("crossing pair levels and bars") {
    const NerveComplex k = build_nerve(testing::tetrahedron());
    const FilteredHomology f = persistence_spectrum(k);
    CHECK(f.max_weight == 5);
    CHECK(f.levels.at(5) == Betti{2, 0, 0, 0});
    CHECK(f.levels.at(4) == Betti{1, 0, 0, 0});
    CHECK(f.levels.at(3) == Betti{3, 0, 0, 0});
    CHECK(f.levels.at(2) == Betti{1, 3, 0, 0});
    CHECK(f.levels.at(1) == Betti{1, 0, 1, 0});
    CHECK(f.disagreeing_levels.empty());

    for (int t = 1; t <= 6; ++t) {
        CAPTURE(t);
        CHECK(rational_level(k, t) == betti_from_bars(f.bars, t));
        CHECK(level_betti(k, t) == rational_level(k, t));
    }
    int essential_h0 = 0;
    for (const Bar& b : f.bars) {
        CHECK(b.birth > b.death);
        if (b.dim == 0 && b.essential()) {
            ++essential_h0;
            CHECK(b.birth == 5);
        }
    }
    CHECK(essential_h0 == 1);
    CHECK(std::count(f.bars.begin(), f.bars.end(), Bar{2, 1, 0}) == 1);
}

TEST_CASE("empty pair has a single contractible level structure") {
    const NerveComplex k = build_nerve(pair_of("....", "...."));
    const FilteredHomology f = persistence_spectrum(k);
    CHECK(f.max_weight == 6);
    CHECK(f.levels.size() == 6);
    for (const auto& [t, b] : f.levels) CHECK(b == Betti{1, 0, 0, 0});
    REQUIRE(f.bars.size() == 1);
    CHECK(f.bars[0] == Bar{0, 6, 0});
    CHECK(level_betti(k, 7) == Betti{0, 0, 0, 0});
}

TEST_CASE("property: bars reproduce every level and levels nest") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 18)(rng);
        const NerveComplex k = build_nerve(testing::random_pair(n, rng));
        const FilteredHomology f = persistence_spectrum(k);
        const HomologyResult h = testing::full_homology(k);
        CHECK(f.levels.at(1) == Betti(h.betti.begin(), h.betti.begin() + 4));
        CHECK(f.disagreeing_levels.empty());
        for (int t = 1; t <= f.max_weight + 1; ++t) {
            CAPTURE(t);
            const Betti level = rational_level(k, t);
            CHECK(betti_from_bars(f.bars, t) == level);
            if (t <= f.max_weight) CHECK(f.levels.at(t) == level);
            if (t >= 3) {
                CHECK(level[2] == 0);
                CHECK(level[3] == 0);
            }
            const NerveComplex upper = k.filtered(t + 1);
            const NerveComplex lower = k.filtered(t);
            for (int d = 0; d <= upper.max_dimension(); ++d) {
                for (const Simplex& s : upper.simplices(d)) CHECK(lower.contains(s.vertices));
            }
        }
    }
}

}  // TEST_SUITE
