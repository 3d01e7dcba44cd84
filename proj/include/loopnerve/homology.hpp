#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopnerve/bigint.hpp"
#include "loopnerve/chain_complex.hpp"
#include "loopnerve/nerve.hpp"

namespace loopnerve {

/// Sparse integer 2-chain: (index into K_2, coefficient), ascending index.
struct Chain {
    std::vector<std::pair<std::size_t, BigInt>> terms;

    bool empty() const { return terms.empty(); }
};

struct HomologyResult {
    /// b_0 .. b_top, at least four entries.
    std::vector<std::size_t> betti;
    /// Invariant factors > 1 per dimension, same length as betti.
    std::vector<std::vector<BigInt>> torsion;
    /// rank(D_d), with ranks[0] = 0.
    std::vector<std::size_t> ranks;
    std::vector<Chain> h2_generators;
    long euler = 0;

    std::size_t h2_rank() const { return betti[2]; }
};

/// Raised when a computed invariant contradicts the homology of loop nerves.
/// Always signals a bug.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(int dimension, std::vector<std::size_t> ranks, const std::string& what);

    int dimension() const { return dimension_; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

private:
    int dimension_;
    std::vector<std::size_t> ranks_;
};

/// Betti numbers and torsion of any chain complex; no theorem checks.
/// Generators are extracted only when with_generators is set.
HomologyResult compute_homology(const ChainComplex& cc, bool with_generators = false);

/// Homology of a loop nerve. Throws TheoremViolation unless b_0 = 1,
/// b_1 = b_3 = 0, no torsion, no simplices above dimension 3, and the
/// Euler characteristic matches the Betti numbers.
HomologyResult homology(const ChainComplex& cc);

/// Chains whose classes freely generate H_2, reduced against Im(D_3).
std::vector<Chain> h2_generators(const ChainComplex& cc);

/// D_2 * g as a dense vector over K_1.
std::vector<BigInt> apply_boundary(const SparseMatrix& d, const Chain& g);

struct SupportEntry {
    LoopId id;
    Owner owner = Owner::S;
    Arc max_arc;
};

/// Loops occurring in a generator, split by structure, ascending ids.
struct SupportReport {
    std::vector<SupportEntry> s_loops;
    std::vector<SupportEntry> t_loops;

    bool empty() const { return s_loops.empty() && t_loops.empty(); }
};

SupportReport generator_support(const Chain& g, const NerveComplex& nerve);

long euler_characteristic(const NerveComplex& nerve);

inline NerveComplex filtered_complex(const NerveComplex& nerve, int t) { return nerve.filtered(t); }

}  // namespace loopnerve
