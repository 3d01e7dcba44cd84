#include "loopnerve/structures.hpp"

#include <algorithm>
#include <sstream>

namespace loopnerve {

const char* to_string(Owner owner) { return owner == Owner::S ? "S" : "T"; }

StructureError::StructureError(Kind kind, int position, const std::string& what)
    : std::runtime_error(what), kind_(kind), position_(position) {}

const char* to_string(StructureError::Kind kind) {
    switch (kind) {
        case StructureError::Kind::UnbalancedBrackets: return "UnbalancedBrackets";
        case StructureError::Kind::InvalidCharacter: return "InvalidCharacter";
        case StructureError::Kind::CrossingArcs: return "CrossingArcs";
        case StructureError::Kind::DuplicateEndpoint: return "DuplicateEndpoint";
        case StructureError::Kind::OutOfRange: return "OutOfRange";
        case StructureError::Kind::LengthMismatch: return "LengthMismatch";
    }
    return "?";
}

namespace {

std::string arc_text(const Arc& a) {
    std::ostringstream os;
    os << '(' << a.start << ',' << a.end << ')';
    return os.str();
}

}  // namespace

SecondaryStructure SecondaryStructure::empty(int n) { return validate_arcs(n, {}); }

std::string SecondaryStructure::to_dot_bracket() const {
    std::string out(static_cast<std::size_t>(n_), '.');
    for (const Arc& a : arcs_) {
        out[static_cast<std::size_t>(a.start - 1)] = '(';
        out[static_cast<std::size_t>(a.end - 1)] = ')';
    }
    return out;
}

SecondaryStructure parse_dot_bracket(std::string_view line) {
    std::vector<Arc> arcs;
    std::vector<int> open;
    const int n = static_cast<int>(line.size());
    for (int i = 0; i < n; ++i) {
        const char c = line[static_cast<std::size_t>(i)];
        const int pos = i + 1;
        if (c == '(') {
            open.push_back(pos);
        } else if (c == ')') {
            if (open.empty()) {
                throw StructureError(StructureError::Kind::UnbalancedBrackets, pos,
                                     "unmatched ')' at column " + std::to_string(pos));
            }
            arcs.push_back(Arc{open.back(), pos});
            open.pop_back();
        } else if (c != '.') {
            throw StructureError(StructureError::Kind::InvalidCharacter, pos,
                                 std::string("invalid character '") + c + "' at column " +
                                     std::to_string(pos));
        }
    }
    if (!open.empty()) {
        throw StructureError(StructureError::Kind::UnbalancedBrackets, n + 1,
                             "unclosed '(' opened at column " + std::to_string(open.back()) +
                                 ", reached end of line");
    }
    return validate_arcs(n, std::move(arcs));
}

SecondaryStructure validate_arcs(int n, std::vector<Arc> arcs) {
    if (n < 0) {
        throw StructureError(StructureError::Kind::OutOfRange, n, "negative length");
    }
    SecondaryStructure s;
    s.n_ = n;
    s.partner_.assign(static_cast<std::size_t>(n + 2), -1);
    s.partner_.front() = n + 1;
    s.partner_.back() = 0;

    for (const Arc& a : arcs) {
        if (a.start < 1 || a.end > n || a.start >= a.end) {
            throw StructureError(StructureError::Kind::OutOfRange, a.start < 1 ? a.start : a.end,
                                 "arc " + arc_text(a) + " outside 1.." + std::to_string(n) +
                                     " or not start < end");
        }
        for (int v : {a.start, a.end}) {
            if (s.partner_[static_cast<std::size_t>(v)] >= 0) {
                throw StructureError(StructureError::Kind::DuplicateEndpoint, v,
                                     "position " + std::to_string(v) +
                                         " is an endpoint of more than one arc");
            }
        }
        s.partner_[static_cast<std::size_t>(a.start)] = a.end;
        s.partner_[static_cast<std::size_t>(a.end)] = a.start;
    }

    std::sort(arcs.begin(), arcs.end());
    // Stack scan: arcs sorted by start are non-crossing iff each arc closes
    // inside the innermost open arc that is still open at its start.
    std::vector<Arc> open;
    for (const Arc& a : arcs) {
        while (!open.empty() && open.back().end < a.start) open.pop_back();
        if (!open.empty() && open.back().end < a.end) {
            throw StructureError(StructureError::Kind::CrossingArcs, a.start,
                                 "crossing arcs " + arc_text(open.back()) + " and " + arc_text(a));
        }
        open.push_back(a);
    }
    s.arcs_ = std::move(arcs);
    return s;
}

bool ArcPoset::precedes(std::size_t inner, std::size_t outer) const {
    const Arc& a = arcs[inner];
    const Arc& b = arcs[outer];
    return b.start < a.start && a.end < b.end;
}

ArcPoset arc_poset(const SecondaryStructure& s) {
    ArcPoset poset;
    poset.arcs.reserve(s.arcs().size() + 1);
    poset.arcs.push_back(s.rainbow());
    poset.arcs.insert(poset.arcs.end(), s.arcs().begin(), s.arcs().end());
    poset.parent.assign(poset.arcs.size(), -1);
    poset.children.resize(poset.arcs.size());

    // Arcs sorted by start: the enclosing chain is a stack.
    std::vector<int> stack{0};
    for (std::size_t i = 1; i < poset.arcs.size(); ++i) {
        const Arc& a = poset.arcs[i];
        while (poset.arcs[static_cast<std::size_t>(stack.back())].end < a.start) stack.pop_back();
        const int cover = stack.back();
        poset.parent[i] = cover;
        poset.children[static_cast<std::size_t>(cover)].push_back(static_cast<int>(i));
        stack.push_back(static_cast<int>(i));
    }
    return poset;
}

bool Loop::contains(int v) const {
    auto it = std::upper_bound(intervals.begin(), intervals.end(), v,
                               [](int x, const Interval& iv) { return x < iv.lo; });
    if (it == intervals.begin()) return false;
    return std::prev(it)->contains(v);
}

std::vector<int> Loop::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (const Interval& iv : intervals) {
        for (int v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
    }
    return out;
}

int Loop::vertex_count() const {
    int total = 0;
    for (const Interval& iv : intervals) total += iv.size();
    return total;
}

std::vector<Loop> loops(const SecondaryStructure& s, Owner owner) {
    const ArcPoset poset = arc_poset(s);
    std::vector<Loop> out;
    out.reserve(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
        Loop loop;
        loop.max_arc = poset.arcs[i];
        loop.owner = owner;
        int cursor = loop.max_arc.start;
        for (int child : poset.children[i]) {
            const Arc& c = poset.arcs[static_cast<std::size_t>(child)];
            loop.intervals.push_back(Interval{cursor, c.start});
            cursor = c.end;
        }
        loop.intervals.push_back(Interval{cursor, loop.max_arc.end});
        out.push_back(std::move(loop));
    }
    return out;
}

std::vector<Gap> loop_gaps(const Loop& loop, int n) {
    std::vector<Gap> gaps;
    const auto& blocks = loop.intervals;
    gaps.reserve(blocks.size() + 1);
    gaps.push_back(Gap{Interval{0, blocks.front().lo}, GapKind::Exterior, 0});
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        gaps.push_back(Gap{Interval{blocks[i].hi, blocks[i + 1].lo}, GapKind::Interior,
                           static_cast<int>(i + 1)});
    }
    gaps.push_back(Gap{Interval{blocks.back().hi, n + 1}, GapKind::Exterior,
                       static_cast<int>(blocks.size())});
    return gaps;
}

BiSecondaryStructure::BiSecondaryStructure(SecondaryStructure s_, SecondaryStructure t_)
    : s(std::move(s_)), t(std::move(t_)) {
    if (s.length() != t.length()) {
        throw StructureError(StructureError::Kind::LengthMismatch, 0,
                             "structures have different lengths " + std::to_string(s.length()) +
                                 " and " + std::to_string(t.length()));
    }
}

}  // namespace loopnerve
