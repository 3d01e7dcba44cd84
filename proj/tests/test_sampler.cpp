#include <doctest.h>

#include <map>
#include <random>

#include <boost/math/distributions/chi_squared.hpp>

#include "loopnerve/sampler.hpp"
#include "support.hpp"

using namespace loopnerve;

TEST_SUITE("sampler") {

TEST_CASE("counts match exhaustive enumeration") {
    for (int min_gap : {0, 1, 3}) {
        for (int n = 0; n <= 10; ++n) {
            CAPTURE(n);
            CAPTURE(min_gap);
            CHECK(count_structures(n, min_gap) == testing::enumerate_dot_brackets(n, min_gap).size());
        }
    }
    const std::vector<BigInt> motzkin{1, 1, 2, 4, 9};
    CHECK(structure_count_table(4, 0) == motzkin);
    CHECK(count_structures(3, 3) == 1);
    CHECK(count_structures(5, 3) == 2);
}

TEST_CASE("counts are exact beyond 64 bits") {
    const BigInt big = count_structures(200, 0);
    CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
    // Motzkin recurrence: (m+3) M(m+1) = (2m+3) M(m) + 3m M(m-1).
    const auto table = structure_count_table(60, 0);
    for (std::size_t m = 1; m + 1 < table.size(); ++m) {
        CHECK(BigInt(m + 3) * table[m + 1] == BigInt(2 * m + 3) * table[m] + BigInt(3 * m) * table[m - 1]);
    }
}

TEST_CASE("singleton support is always empty") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(sample_uniform({3, 3, seed}).arcs().empty());
    }
}

TEST_CASE("sampling is deterministic given the seed") {
    const SecondaryStructure a = sample_uniform({50, 0, 42});
    const SecondaryStructure b = sample_uniform({50, 0, 42});
    CHECK(a == b);
    CHECK(a.length() == 50);
    CHECK_FALSE(a == sample_uniform({50, 0, 43}));

    const UniformSampler sampler(30, 0);
    CHECK(sample_pair(sampler, 7, 3).s == sample_pair(sampler, 7, 3).s);
    CHECK(sample_pair(sampler, 7, 3).t == sample_pair(sampler, 7, 3).t);
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 0) != derive_seed(8, 0));
}

TEST_CASE("uniform_below stays in range and hits every value") {
    std::mt19937_64 rng(1);
    std::map<int, int> seen;
    for (int i = 0; i < 2000; ++i) {
        const BigInt x = uniform_below(7, rng);
        REQUIRE(x >= 0);
        REQUIRE(x < 7);
        ++seen[static_cast<int>(x)];
    }
    CHECK(seen.size() == 7);
    const BigInt huge = BigInt(1) << 130;
    for (int i = 0; i < 200; ++i) CHECK(uniform_below(huge, rng) < huge);
    CHECK(uniform_below(1, rng) == 0);
}

TEST_CASE("samples respect the minimum gap") {
    const UniformSampler sampler(40, 3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const SecondaryStructure s = sampler(rng);
        for (const Arc& a : s.arcs()) CHECK(a.end - a.start - 1 >= 3);
    }
}

TEST_CASE("n = 4 frequencies are 1/9 within 0.5%") {
    const UniformSampler sampler(4, 0);
    std::mt19937_64 rng(123);
    std::map<std::string, int> freq;
    const int draws = 90000;
    for (int i = 0; i < draws; ++i) ++freq[sampler(rng).to_dot_bracket()];
    const auto all = testing::enumerate_dot_brackets(4, 0);
    REQUIRE(all.size() == 9);
    CHECK(freq.size() == 9);
    for (const std::string& s : all) {
        CAPTURE(s);
        CHECK(std::abs(freq[s] / double(draws) - 1.0 / 9.0) < 0.005);
    }
}

TEST_CASE("chi-square against uniform for small n with a minimum gap") {
    for (int n = 3; n <= 7; ++n) {
        const auto all = testing::enumerate_dot_brackets(n, 1);
        const UniformSampler sampler(n, 1);
        REQUIRE(sampler.total() == all.size());
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        const std::size_t draws = 2000 * all.size();
        std::map<std::string, std::size_t> freq;
        for (std::size_t i = 0; i < draws; ++i) ++freq[sampler(rng).to_dot_bracket()];
        double chi2 = 0;
        const double expected = static_cast<double>(draws) / static_cast<double>(all.size());
        for (const std::string& s : all) {
            const double d = static_cast<double>(freq[s]) - expected;
            chi2 += d * d / expected;
        }
        CHECK(freq.size() == all.size());
        if (all.size() > 1) {
            const boost::math::chi_squared dist(static_cast<double>(all.size() - 1));
            CAPTURE(n);
            CHECK(chi2 < boost::math::quantile(boost::math::complement(dist, 0.001)));
        }
    }
}

}  // TEST_SUITE
