#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopnerve/nerve.hpp"

namespace loopnerve {

using Edge = std::pair<LoopId, LoopId>;

/// The neighborhood of a loop in the 1-skeleton. For a T-loop t the
/// same-structure neighbors are only the loops directly nested in t;
/// S-loops are handled with the roles of S and T exchanged.
struct NeighborGraph {
    LoopId center;
    std::vector<LoopId> s_neighbors;
    std::vector<LoopId> t_neighbors;
    /// s_neighbors and t_neighbors merged, ascending.
    std::vector<LoopId> vertices;
    /// 1-simplices with both ends in vertices.
    std::vector<Edge> edges;
    /// Edges that span a 2-simplex together with the center.
    std::vector<Edge> delta_edges;
};

NeighborGraph neighbor_graph(LoopId center, const NerveComplex& nerve);

struct DeltaCertificate {
    bool exists = false;
    /// Spanning tree of the delta edges when exists is true.
    std::vector<Edge> spanning_tree;
    /// Connected components of the delta edges otherwise.
    std::vector<std::vector<LoopId>> components;
};

/// True iff the delta edges connect every vertex of the neighbor graph.
/// Neighbor graphs with at most one vertex pass.
DeltaCertificate delta_graph_exists(LoopId center, const NerveComplex& nerve);

struct LemmaCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    /// First counterexample, empty when none.
    std::string witness;

    bool passed() const { return failures == 0; }
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;

    bool all_passed() const;
    const LemmaCheck& get(const std::string& name) const;
};

namespace lemma {
inline constexpr const char* kThreeLoopsDisjoint = "three_loops_disjoint";
inline constexpr const char* kPureEdgeWeightTwo = "pure_edge_weight_two";
inline constexpr const char* kTriangleOnePureEdge = "triangle_one_pure_edge";
inline constexpr const char* kTetrahedronTwoByTwo = "tetrahedron_two_by_two";
inline constexpr const char* kPureEdgeInTwoTetrahedra = "pure_edge_in_at_most_two_tetrahedra";
inline constexpr const char* kExposedFaces = "tetrahedron_exposed_faces";
inline constexpr const char* kNoHighSimplices = "no_simplex_above_dim_3";
}  // namespace lemma

/// Checks every structural property of the loop nerve instance-wise.
LemmaReport verify_structure_lemmas(const NerveComplex& nerve);

std::string format_simplex(std::span<const LoopId> vertices, const NerveComplex& nerve);

}  // namespace loopnerve
