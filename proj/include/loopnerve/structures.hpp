#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loopnerve {

/// Which half-plane a loop or arc belongs to.
enum class Owner { S, T };

const char* to_string(Owner owner);

/// A base pair (start, end) on the backbone, start < end.
struct Arc {
    int start = 0;
    int end = 0;

    auto operator<=>(const Arc&) const = default;
};

/// Closed backbone interval [lo, hi].
struct Interval {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    auto operator<=>(const Interval&) const = default;
};

class StructureError : public std::runtime_error {
public:
    enum class Kind {
        UnbalancedBrackets,
        InvalidCharacter,
        CrossingArcs,
        DuplicateEndpoint,
        OutOfRange,
        LengthMismatch,
    };

    StructureError(Kind kind, int position, const std::string& what);

    Kind kind() const { return kind_; }
    /// 1-based column of the offending character, or the offending
    /// backbone position for arc-list input; 0 when not applicable.
    int position() const { return position_; }

private:
    Kind kind_;
    int position_;
};

const char* to_string(StructureError::Kind kind);

/// A non-crossing arc set over positions 1..n, closed by the rainbow
/// (0, n+1). Immutable once constructed; use the factories below.
class SecondaryStructure {
public:
    SecondaryStructure() = default;

    static SecondaryStructure empty(int n);

    int length() const { return n_; }
    /// Non-rainbow arcs sorted by start.
    const std::vector<Arc>& arcs() const { return arcs_; }
    Arc rainbow() const { return Arc{0, n_ + 1}; }
    /// Partner of backbone position v in [0, n+1], or -1 when unpaired.
    /// Positions 0 and n+1 are partners of each other.
    int partner(int v) const { return partner_[static_cast<std::size_t>(v)]; }
    bool is_paired(int v) const { return partner(v) >= 0; }

    std::string to_dot_bracket() const;

    bool operator==(const SecondaryStructure& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    friend SecondaryStructure validate_arcs(int n, std::vector<Arc> arcs);

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> partner_{1, 0};
};

/// Parses a dot-bracket line over {'(', ')', '.'}.
/// Throws StructureError (UnbalancedBrackets, InvalidCharacter).
SecondaryStructure parse_dot_bracket(std::string_view line);

/// Builds a structure from an arc list with 1-based positions.
/// Throws StructureError (CrossingArcs, DuplicateEndpoint, OutOfRange).
SecondaryStructure validate_arcs(int n, std::vector<Arc> arcs);

/// Hasse diagram of the nesting order. Index 0 is the rainbow; the
/// remaining arcs follow in order of start position.
struct ArcPoset {
    std::vector<Arc> arcs;
    /// Immediate cover of each arc; -1 for the rainbow.
    std::vector<int> parent;
    /// Immediately covered arcs, left to right.
    std::vector<std::vector<int>> children;

    std::size_t size() const { return arcs.size(); }
    /// True iff arcs[inner] is strictly nested in arcs[outer].
    bool precedes(std::size_t inner, std::size_t outer) const;
};

ArcPoset arc_poset(const SecondaryStructure& s);

/// Disjoint union of backbone blocks identified with its maximal arc.
struct Loop {
    std::vector<Interval> intervals;
    Arc max_arc;
    Owner owner = Owner::S;

    bool contains(int v) const;
    std::vector<int> vertices() const;
    int vertex_count() const;

    /// Loops compare as vertex sets.
    bool operator==(const Loop& other) const { return intervals == other.intervals; }
};

/// One loop per arc, index-aligned with arc_poset(s).arcs.
std::vector<Loop> loops(const SecondaryStructure& s, Owner owner = Owner::S);

enum class GapKind { Exterior, Interior };

struct Gap {
    Interval interval;
    GapKind kind = GapKind::Interior;
    int index = 0;
};

std::vector<Gap> loop_gaps(const Loop& loop, int n);

struct BiSecondaryStructure {
    SecondaryStructure s;
    SecondaryStructure t;

    BiSecondaryStructure() = default;
    /// Throws StructureError(LengthMismatch) when lengths differ.
    BiSecondaryStructure(SecondaryStructure s_, SecondaryStructure t_);

    int length() const { return s.length(); }
    const SecondaryStructure& get(Owner owner) const { return owner == Owner::S ? s : t; }
};

}  // namespace loopnerve
