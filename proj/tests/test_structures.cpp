#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace loopnerve;
using testing::pair_of;

namespace {

std::vector<Interval> blocks(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Interval> out;
    for (auto [lo, hi] : list) out.push_back(Interval{lo, hi});
    return out;
}

StructureError::Kind parse_error_kind(const std::string& line) {
    try {
        parse_dot_bracket(line);
    } catch (const StructureError& e) {
        return e.kind();
    }
    FAIL("no error for " << line);
    return StructureError::Kind::OutOfRange;
}

SecondaryStructure three_block_structure() {
    // 21 positions with arcs (4,19), (5,11), (14,18); 12 and 13 unpaired.
    return validate_arcs(21, {{4, 19}, {5, 11}, {14, 18}});
}

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("parse simple dot-bracket lines") {
    const SecondaryStructure s = parse_dot_bracket("(.).");
    CHECK(s.length() == 4);
    CHECK(s.arcs() == std::vector<Arc>{{1, 3}});
    CHECK(s.rainbow() == Arc{0, 5});
    CHECK(s.partner(1) == 3);
    CHECK(s.partner(0) == 5);
    CHECK_FALSE(s.is_paired(2));
    CHECK(s.to_dot_bracket() == "(.).");

    const SecondaryStructure dots = parse_dot_bracket("....");
    CHECK(dots.arcs().empty());
    CHECK(dots.rainbow() == Arc{0, 5});
    CHECK(dots == SecondaryStructure::empty(4));
}

TEST_CASE("parse errors carry kind and column") {
    CHECK(parse_error_kind("(().") == StructureError::Kind::UnbalancedBrackets);
    CHECK(parse_error_kind("..)(") == StructureError::Kind::UnbalancedBrackets);
    CHECK(parse_error_kind("(x)") == StructureError::Kind::InvalidCharacter);
    try {
        parse_dot_bracket("..)");
        FAIL("expected an error");
    } catch (const StructureError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_dot_bracket("(.A)");
        FAIL("expected an error");
    } catch (const StructureError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_dot_bracket("(().");
        FAIL("expected an error");
    } catch (const StructureError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("validate_arcs rejects crossings, shared endpoints and out-of-range arcs") {
    auto kind_of = [](int n, std::vector<Arc> arcs) {
        try {
            validate_arcs(n, std::move(arcs));
        } catch (const StructureError& e) {
            return e.kind();
        }
        return StructureError::Kind::LengthMismatch;
    };
    CHECK(kind_of(4, {{1, 3}, {2, 4}}) == StructureError::Kind::CrossingArcs);
    CHECK(kind_of(2, {{1, 2}, {1, 2}}) == StructureError::Kind::DuplicateEndpoint);
    CHECK(kind_of(4, {{0, 3}}) == StructureError::Kind::OutOfRange);
    CHECK(kind_of(4, {{2, 5}}) == StructureError::Kind::OutOfRange);
    CHECK(validate_arcs(4, {{1, 4}, {2, 3}}).to_dot_bracket() == "(())");
}

TEST_CASE("length mismatch in a pair") {
    CHECK_THROWS_AS(pair_of("..", "..."), StructureError);
}

TEST_CASE("arc poset of nested and sibling arcs") {
    const ArcPoset p = arc_poset(validate_arcs(4, {{1, 4}, {2, 3}}));
    REQUIRE(p.size() == 3);
    CHECK(p.arcs[0] == Arc{0, 5});
    CHECK(p.arcs[1] == Arc{1, 4});
    CHECK(p.arcs[2] == Arc{2, 3});
    CHECK(p.parent == std::vector<int>{-1, 0, 1});
    CHECK(p.precedes(2, 1));
    CHECK(p.precedes(2, 0));
    CHECK_FALSE(p.precedes(1, 2));

    const ArcPoset empty = arc_poset(SecondaryStructure::empty(7));
    CHECK(empty.size() == 1);
    CHECK(empty.parent == std::vector<int>{-1});

    const ArcPoset three = arc_poset(three_block_structure());
    REQUIRE(three.size() == 4);
    CHECK(three.children[1] == std::vector<int>{2, 3});
    CHECK(three.parent[2] == 1);
    CHECK(three.parent[3] == 1);
}

TEST_CASE("loops from the definition") {
    const auto outer = loops(three_block_structure());
    CHECK(outer[1].intervals == blocks({{4, 5}, {11, 14}, {18, 19}}));
    CHECK(outer[1].max_arc == Arc{4, 19});
    CHECK(outer[1].vertex_count() == 8);

    const auto empty = loops(SecondaryStructure::empty(4));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].intervals == blocks({{0, 5}}));

    const auto one = loops(parse_dot_bracket("(.)."), Owner::T);
    REQUIRE(one.size() == 2);
    CHECK(one[0].intervals == blocks({{0, 1}, {3, 5}}));
    CHECK(one[1].intervals == blocks({{1, 3}}));
    CHECK(one[1].owner == Owner::T);
    CHECK(one[1].vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("gaps of a loop") {
    const auto outer = loops(three_block_structure());
    const auto gaps = loop_gaps(outer[1], 21);
    REQUIRE(gaps.size() == 4);
    CHECK(gaps[0].interval == Interval{0, 4});
    CHECK(gaps[1].interval == Interval{5, 11});
    CHECK(gaps[2].interval == Interval{14, 18});
    CHECK(gaps[3].interval == Interval{19, 22});
    CHECK(gaps[0].kind == GapKind::Exterior);
    CHECK(gaps[1].kind == GapKind::Interior);
    CHECK(gaps[2].kind == GapKind::Interior);
    CHECK(gaps[3].kind == GapKind::Exterior);

    const auto rainbow = loop_gaps(loops(SecondaryStructure::empty(4))[0], 4);
    REQUIRE(rainbow.size() == 2);
    CHECK(rainbow[0].interval == Interval{0, 0});
    CHECK(rainbow[1].interval == Interval{5, 5});

    const auto single = loop_gaps(loops(parse_dot_bracket("(.)."))[1], 4);
    REQUIRE(single.size() == 2);
    CHECK(single[0].interval == Interval{0, 1});
    CHECK(single[1].interval == Interval{3, 5});
}

TEST_CASE("n = 0 flows through") {
    const SecondaryStructure s = parse_dot_bracket("");
    CHECK(s.length() == 0);
    CHECK(s.rainbow() == Arc{0, 1});
    const auto l = loops(s);
    REQUIRE(l.size() == 1);
    CHECK(l[0].vertices() == std::vector<int>{0, 1});
}

TEST_CASE("property: loop decomposition on random structures") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 30)(rng);
        const SecondaryStructure s = testing::random_structure(n, rng);
        CAPTURE(s.to_dot_bracket());

        // Round trip and no crossing pair.
        CHECK(parse_dot_bracket(s.to_dot_bracket()) == s);
        for (const Arc& a : s.arcs()) {
            for (const Arc& b : s.arcs()) {
                CHECK_FALSE((a.start < b.start && b.start < a.end && a.end < b.end));
            }
        }

        const ArcPoset p = arc_poset(s);
        const auto ls = loops(s);
        REQUIRE(ls.size() == s.arcs().size() + 1);

        // Hasse diagram is a tree rooted at the rainbow.
        for (std::size_t i = 1; i < p.size(); ++i) {
            std::size_t steps = 0;
            int cur = static_cast<int>(i);
            while (cur != 0 && steps <= p.size()) {
                cur = p.parent[static_cast<std::size_t>(cur)];
                ++steps;
            }
            CHECK(cur == 0);
            CHECK(p.precedes(i, static_cast<std::size_t>(p.parent[i])));
        }

        // Bijection loops <-> arcs.
        std::set<Arc> max_arcs;
        for (const Loop& l : ls) max_arcs.insert(l.max_arc);
        CHECK(max_arcs.size() == ls.size());

        std::vector<int> hits(static_cast<std::size_t>(n) + 2, 0);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            CHECK(ls[i].max_arc == p.arcs[i]);
            CHECK(ls[i].vertices() == oracle::naive_loop_vertices(s, ls[i].max_arc));
            for (int v : ls[i].vertices()) ++hits[static_cast<std::size_t>(v)];

            // Blocks and gaps alternate and tile [0, n+1].
            const auto gaps = loop_gaps(ls[i], n);
            REQUIRE(gaps.size() == ls[i].intervals.size() + 1);
            CHECK(gaps.front().interval.lo == 0);
            CHECK(gaps.back().interval.hi == n + 1);
            for (std::size_t k = 0; k < ls[i].intervals.size(); ++k) {
                CHECK(gaps[k].interval.hi == ls[i].intervals[k].lo);
                CHECK(gaps[k + 1].interval.lo == ls[i].intervals[k].hi);
            }
        }
        // Unpaired vertices lie in one loop, arc endpoints in two, and the
        // union of all loops is the whole backbone.
        for (int v = 0; v <= n + 1; ++v) {
            const bool formal = v == 0 || v == n + 1;
            CHECK(hits[static_cast<std::size_t>(v)] == (s.is_paired(v) && !formal ? 2 : 1));
        }
    }
}

}  // TEST_SUITE
