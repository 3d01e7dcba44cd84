#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "loopnerve/structures.hpp"

namespace loopnerve {

/// Index of a loop in the combined loop table of a bi-secondary structure.
/// Ids follow the default simplicial order: S-loops in post-order of the
/// S arc tree, then T-loops in post-order of the T arc tree.
struct LoopId {
    std::uint32_t value = 0;

    auto operator<=>(const LoopId&) const = default;
};

struct LoopEntry {
    Loop loop;
    /// Index of loop.max_arc in arc_poset() of its owner.
    std::size_t arc_index = 0;
};

struct Simplex {
    /// Sorted by LoopId.
    std::vector<LoopId> vertices;
    /// Common backbone vertices of all member loops, sorted.
    std::vector<int> intersection;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    int weight() const { return static_cast<int>(intersection.size()); }
};

/// The nerve of the loop set of R = (S, T). Immutable after construction.
class NerveComplex {
public:
    /// Incidence-driven enumeration: every nonempty subset of the loops
    /// meeting a backbone vertex is a simplex witnessed by that vertex.
    static NerveComplex build(const BiSecondaryStructure& r);

    const BiSecondaryStructure& structure() const { return structure_; }
    int length() const { return structure_.length(); }

    std::size_t loop_count() const { return loops_.size(); }
    const std::vector<LoopEntry>& loops() const { return loops_; }
    const Loop& loop(LoopId id) const { return loops_[id.value].loop; }
    Owner owner(LoopId id) const { return loops_[id.value].loop.owner; }
    const ArcPoset& poset(Owner owner) const { return owner == Owner::S ? s_poset_ : t_poset_; }
    /// Loop whose maximal arc is poset(owner).arcs[arc_index].
    LoopId loop_of_arc(Owner owner, std::size_t arc_index) const;
    /// Loop of the immediate cover of this loop's maximal arc.
    std::optional<LoopId> parent(LoopId id) const;
    /// Loops whose maximal arcs are immediately covered by this one, left to right.
    std::vector<LoopId> children(LoopId id) const;

    /// Highest d with K_d nonempty, -1 for an empty complex.
    int max_dimension() const { return static_cast<int>(strata_.size()) - 1; }
    /// K_d in lexicographic order of vertex ids; empty for d > max_dimension().
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t count(int d) const { return simplices(d).size(); }
    std::size_t total_count() const;

    /// Position in simplices(vertices.size() - 1), if present.
    std::optional<std::size_t> find(std::span<const LoopId> vertices) const;
    bool contains(std::span<const LoopId> vertices) const { return find(vertices).has_value(); }

    /// Loops containing backbone vertex v, ascending ids.
    const std::vector<LoopId>& loops_at(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

    /// Subcomplex of simplices with weight >= min_weight. Loop table and
    /// incidence are shared with the parent complex.
    NerveComplex filtered(int min_weight) const;

private:
    void index_strata();

    BiSecondaryStructure structure_;
    ArcPoset s_poset_;
    ArcPoset t_poset_;
    std::vector<LoopEntry> loops_;
    std::vector<std::uint32_t> s_arc_to_loop_;
    std::vector<std::uint32_t> t_arc_to_loop_;
    std::vector<std::vector<LoopId>> incidence_;
    std::vector<std::vector<Simplex>> strata_;
    std::vector<std::map<std::vector<LoopId>, std::size_t>> lookup_;
};

inline NerveComplex build_nerve(const BiSecondaryStructure& r) { return NerveComplex::build(r); }

enum class SiblingOrder { LeftToRight, RightToLeft };

/// A linear extension of the ordinal sum in which every S-loop precedes
/// every T-loop and nested loops precede the loops enclosing them.
class SimplicialOrder {
public:
    /// Post-order of each arc tree, S first.
    static SimplicialOrder post_order(const NerveComplex& nerve,
                                      SiblingOrder siblings = SiblingOrder::LeftToRight);
    /// A random linear extension: repeatedly places a uniformly chosen loop
    /// whose nested loops are already placed.
    static SimplicialOrder random_extension(const NerveComplex& nerve, std::uint64_t seed);
    /// Arbitrary sequence; use is_compliant() to check it.
    static SimplicialOrder from_sequence(std::vector<LoopId> sequence);

    std::size_t rank(LoopId id) const { return rank_[id.value]; }
    const std::vector<LoopId>& sequence() const { return sequence_; }
    /// Vertices sorted by rank.
    std::vector<LoopId> arrange(std::span<const LoopId> vertices) const;
    bool is_compliant(const NerveComplex& nerve) const;

    bool operator==(const SimplicialOrder& other) const { return sequence_ == other.sequence_; }

private:
    explicit SimplicialOrder(std::vector<LoopId> sequence);

    std::vector<LoopId> sequence_;
    std::vector<std::size_t> rank_;
};

inline SimplicialOrder simplicial_order(const NerveComplex& nerve) {
    return SimplicialOrder::post_order(nerve);
}

enum class EdgeKind { Pure, Mixed };

/// Pure iff both loops come from the same structure. Requires dim() == 1.
EdgeKind classify_1simplex(const Simplex& edge, const NerveComplex& nerve);

/// Indices into K_2 of the faces of K_3[tetrahedron] contained in no other
/// 3-simplex.
std::vector<std::size_t> exposed_2faces(std::size_t tetrahedron, const NerveComplex& nerve);

/// The codimension-1 faces of a simplex, face i omitting vertex i.
std::vector<std::vector<LoopId>> facets(std::span<const LoopId> vertices);

}  // namespace loopnerve
