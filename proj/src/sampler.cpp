#include "loopnerve/sampler.hpp"

#include <utility>

namespace loopnerve {

std::vector<BigInt> structure_count_table(int n, int min_gap) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // First position unpaired, or paired with position j (1-based within
        // the segment) enclosing j - 2 >= min_gap positions.
        BigInt total = c[static_cast<std::size_t>(m - 1)];
        for (int j = min_gap + 2; j <= m; ++j) {
            total += c[static_cast<std::size_t>(j - 2)] * c[static_cast<std::size_t>(m - j)];
        }
        c[static_cast<std::size_t>(m)] = std::move(total);
    }
    return c;
}

BigInt count_structures(int n, int min_gap) { return structure_count_table(n, min_gap).back(); }

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
    if (bound <= 1) return 0;
    const BigInt max = bound - 1;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(max)) + 1;
    const unsigned words = (bits + 63) / 64;
    const BigInt mask = (BigInt(1) << bits) - 1;
    for (;;) {
        BigInt x = 0;
        for (unsigned w = 0; w < words; ++w) {
            x <<= 64;
            x |= BigInt(rng());
        }
        x &= mask;
        if (x < bound) return x;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the mixed pair
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

UniformSampler::UniformSampler(int n, int min_gap)
    : n_(n), min_gap_(min_gap), counts_(structure_count_table(n, min_gap)) {}

SecondaryStructure UniformSampler::operator()(std::mt19937_64& rng) const {
    std::vector<Arc> arcs;
    // Segments [lo, hi] of 1-based positions still to be filled.
    std::vector<std::pair<int, int>> pending{{1, n_}};
    while (!pending.empty()) {
        auto [lo, hi] = pending.back();
        pending.pop_back();
        while (lo <= hi) {
            const int m = hi - lo + 1;
            BigInt u = uniform_below(counts_[static_cast<std::size_t>(m)], rng);
            const BigInt& unpaired = counts_[static_cast<std::size_t>(m - 1)];
            if (u < unpaired) {
                ++lo;
                continue;
            }
            u -= unpaired;
            int partner = -1;
            for (int j = min_gap_ + 2; j <= m; ++j) {
                BigInt w = counts_[static_cast<std::size_t>(j - 2)] *
                           counts_[static_cast<std::size_t>(m - j)];
                if (u < w) {
                    partner = lo + j - 1;
                    break;
                }
                u -= w;
            }
            arcs.push_back(Arc{lo, partner});
            pending.emplace_back(lo + 1, partner - 1);
            lo = partner + 1;
        }
    }
    return validate_arcs(n_, std::move(arcs));
}

SecondaryStructure sample_uniform(const SamplerConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return UniformSampler(cfg.n, cfg.min_gap)(rng);
}

BiSecondaryStructure sample_pair(const UniformSampler& sampler, std::uint64_t master,
                                 std::uint64_t index) {
    std::mt19937_64 rng(derive_seed(master, index));
    SecondaryStructure s = sampler(rng);
    SecondaryStructure t = sampler(rng);
    return BiSecondaryStructure(std::move(s), std::move(t));
}

}  // namespace loopnerve
