#pragma once

#include <string>
#include <vector>

#include "loopnerve/chain_complex.hpp"
#include "loopnerve/nerve.hpp"
#include "loopnerve/smith.hpp"

// Independent reference computations used to cross-check the main code
// paths. Deliberately naive; intended for small instances only.
namespace loopnerve::oracle {

/// Vertex set of the loop of `arc` straight from the definition: v in
/// [start, end] not strictly inside any arc nested in `arc`.
std::vector<int> naive_loop_vertices(const SecondaryStructure& s, Arc arc);

struct OracleSimplex {
    std::vector<LoopId> vertices;
    std::vector<int> intersection;

    bool operator==(const OracleSimplex&) const = default;
};

/// Every subset of at most max_size loops with a nonempty common
/// intersection, found by explicit set intersection. Loop ids are taken
/// from `nerve` by matching owner and maximal arc.
std::vector<std::vector<OracleSimplex>> brute_force_nerve(const NerveComplex& nerve, std::size_t max_size = 5);

/// Empty string when the nerve matches the brute-force enumeration
/// simplex-for-simplex and weight-for-weight, else a description.
std::string compare_with_brute_force(const NerveComplex& nerve);

/// Rank over the rationals by fraction-based Gaussian elimination.
std::size_t rational_rank(const IntMatrix& m);

/// Betti numbers b_0..b_3 from rational ranks of the boundary matrices.
std::vector<std::size_t> rational_betti(const ChainComplex& cc);

}  // namespace loopnerve::oracle
