#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "loopnerve/bigint.hpp"
#include "loopnerve/structures.hpp"

namespace loopnerve {

struct SamplerConfig {
    int n = 0;
    /// Minimum number of unpaired positions enclosed by any arc.
    int min_gap = 0;
    std::uint64_t seed = 0;
};

/// Number of non-crossing partial matchings on n positions in which every
/// arc (i, j) satisfies j - i - 1 >= min_gap.
BigInt count_structures(int n, int min_gap);

/// Table of count_structures(m, min_gap) for m = 0..n.
std::vector<BigInt> structure_count_table(int n, int min_gap);

/// Exactly uniform sampler over the structures counted above.
/// Randomness comes only from the supplied engine, so a seeded engine gives
/// the same sequence of structures on every platform.
class UniformSampler {
public:
    UniformSampler(int n, int min_gap);

    SecondaryStructure operator()(std::mt19937_64& rng) const;

    int length() const { return n_; }
    const BigInt& total() const { return counts_.back(); }

private:
    int n_;
    int min_gap_;
    std::vector<BigInt> counts_;
};

SecondaryStructure sample_uniform(const SamplerConfig& cfg);

/// Uniform integer in [0, bound) by masked rejection over 64-bit words.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

/// Per-instance seed for batch runs, independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Two independent uniform structures drawn from one engine seeded with
/// derive_seed(master, index).
BiSecondaryStructure sample_pair(const UniformSampler& sampler, std::uint64_t master,
                                 std::uint64_t index);

}  // namespace loopnerve
