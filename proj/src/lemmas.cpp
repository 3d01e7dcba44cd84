#include "loopnerve/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopnerve {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

void fail(LemmaCheck& check, const std::string& witness) {
    if (check.failures++ == 0) check.witness = witness;
}

int count_pure_edges(std::span<const LoopId> vertices, const NerveComplex& nerve) {
    int pure = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (nerve.owner(vertices[i]) == nerve.owner(vertices[j])) ++pure;
        }
    }
    return pure;
}

}  // namespace

std::string format_simplex(std::span<const LoopId> vertices, const NerveComplex& nerve) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ", ";
        const Loop& l = nerve.loop(vertices[i]);
        os << vertices[i].value << ':' << to_string(l.owner) << '(' << l.max_arc.start << ','
           << l.max_arc.end << ')';
    }
    os << '}';
    return os.str();
}

NeighborGraph neighbor_graph(LoopId center, const NerveComplex& nerve) {
    NeighborGraph g;
    g.center = center;
    const Owner own = nerve.owner(center);

    for (const Simplex& e : nerve.simplices(1)) {
        if (e.vertices[0] != center && e.vertices[1] != center) continue;
        const LoopId other = e.vertices[0] == center ? e.vertices[1] : e.vertices[0];
        if (nerve.owner(other) != own) g.s_neighbors.push_back(other);
    }
    for (LoopId child : nerve.children(center)) {
        const LoopId pair[2] = {std::min(center, child), std::max(center, child)};
        if (nerve.contains(pair)) g.t_neighbors.push_back(child);
    }
    std::sort(g.s_neighbors.begin(), g.s_neighbors.end());
    std::sort(g.t_neighbors.begin(), g.t_neighbors.end());
    std::merge(g.s_neighbors.begin(), g.s_neighbors.end(), g.t_neighbors.begin(),
               g.t_neighbors.end(), std::back_inserter(g.vertices));

    auto in_graph = [&](LoopId x) {
        return std::binary_search(g.vertices.begin(), g.vertices.end(), x);
    };
    for (const Simplex& e : nerve.simplices(1)) {
        const LoopId a = e.vertices[0];
        const LoopId b = e.vertices[1];
        if (!in_graph(a) || !in_graph(b)) continue;
        g.edges.emplace_back(a, b);
        std::vector<LoopId> tri{a, b, center};
        std::sort(tri.begin(), tri.end());
        if (nerve.contains(tri)) g.delta_edges.emplace_back(a, b);
    }
    return g;
}

DeltaCertificate delta_graph_exists(LoopId center, const NerveComplex& nerve) {
    const NeighborGraph g = neighbor_graph(center, nerve);
    DeltaCertificate cert;
    if (g.vertices.size() <= 1) {
        cert.exists = true;
        return cert;
    }
    auto index_of = [&](LoopId x) {
        return static_cast<std::size_t>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), x) - g.vertices.begin());
    };
    DisjointSets sets(g.vertices.size());
    for (const Edge& e : g.delta_edges) {
        if (sets.unite(index_of(e.first), index_of(e.second))) cert.spanning_tree.push_back(e);
    }
    cert.exists = cert.spanning_tree.size() + 1 == g.vertices.size();
    if (!cert.exists) {
        cert.spanning_tree.clear();
        std::map<std::size_t, std::vector<LoopId>> groups;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) groups[sets.find(i)].push_back(g.vertices[i]);
        for (auto& [root, members] : groups) cert.components.push_back(std::move(members));
    }
    return cert;
}

bool LemmaReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

const LemmaCheck& LemmaReport::get(const std::string& name) const {
    for (const LemmaCheck& c : checks) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no lemma check named " + name);
}

LemmaReport verify_structure_lemmas(const NerveComplex& nerve) {
    LemmaCheck three{lemma::kThreeLoopsDisjoint, 0, 0, {}};
    LemmaCheck pure_weight{lemma::kPureEdgeWeightTwo, 0, 0, {}};
    LemmaCheck triangle{lemma::kTriangleOnePureEdge, 0, 0, {}};
    LemmaCheck tetra{lemma::kTetrahedronTwoByTwo, 0, 0, {}};
    LemmaCheck two_tetra{lemma::kPureEdgeInTwoTetrahedra, 0, 0, {}};
    LemmaCheck exposed{lemma::kExposedFaces, 0, 0, {}};
    LemmaCheck high{lemma::kNoHighSimplices, 0, 0, {}};

    // Each backbone vertex lies in one or two loops of each structure.
    for (int v = 0; v <= nerve.length() + 1; ++v) {
        int per_owner[2] = {0, 0};
        for (LoopId id : nerve.loops_at(v)) ++per_owner[nerve.owner(id) == Owner::S ? 0 : 1];
        ++three.checked;
        if (per_owner[0] < 1 || per_owner[0] > 2 || per_owner[1] < 1 || per_owner[1] > 2) {
            fail(three, "vertex " + std::to_string(v) + " lies in " + std::to_string(per_owner[0]) +
                            " S-loops and " + std::to_string(per_owner[1]) + " T-loops");
        }
    }
    for (int d = 2; d <= nerve.max_dimension(); ++d) {
        for (const Simplex& y : nerve.simplices(d)) {
            ++three.checked;
            const auto s_count = std::count_if(y.vertices.begin(), y.vertices.end(),
                                               [&](LoopId x) { return nerve.owner(x) == Owner::S; });
            if (s_count >= 3 || y.vertices.size() - static_cast<std::size_t>(s_count) >= 3) {
                fail(three, format_simplex(y.vertices, nerve) + " has three loops of one structure");
            }
        }
    }

    for (const Simplex& e : nerve.simplices(1)) {
        if (classify_1simplex(e, nerve) != EdgeKind::Pure) continue;
        ++pure_weight.checked;
        if (e.weight() != 2) {
            fail(pure_weight, format_simplex(e.vertices, nerve) + " pure with weight " +
                                  std::to_string(e.weight()));
        }
        ++two_tetra.checked;
        std::size_t cofaces = 0;
        for (const Simplex& y : nerve.simplices(3)) {
            if (std::includes(y.vertices.begin(), y.vertices.end(), e.vertices.begin(), e.vertices.end())) {
                ++cofaces;
            }
        }
        if (cofaces > 2) {
            fail(two_tetra, format_simplex(e.vertices, nerve) + " lies in " + std::to_string(cofaces) +
                                " 3-simplices");
        }
    }

    for (const Simplex& y : nerve.simplices(2)) {
        ++triangle.checked;
        const int pure = count_pure_edges(y.vertices, nerve);
        if (pure != 1 || y.weight() > 2) {
            fail(triangle, format_simplex(y.vertices, nerve) + " has " + std::to_string(pure) +
                               " pure faces, weight " + std::to_string(y.weight()));
        }
    }

    const auto& k3 = nerve.simplices(3);
    for (std::size_t i = 0; i < k3.size(); ++i) {
        const Simplex& y = k3[i];
        ++tetra.checked;
        const auto s_count = std::count_if(y.vertices.begin(), y.vertices.end(),
                                           [&](LoopId x) { return nerve.owner(x) == Owner::S; });
        const int pure = count_pure_edges(y.vertices, nerve);
        if (s_count != 2 || pure != 2 || y.weight() > 2) {
            fail(tetra, format_simplex(y.vertices, nerve) + " has " + std::to_string(s_count) +
                            " S-loops, " + std::to_string(pure) + " pure faces, weight " +
                            std::to_string(y.weight()));
        }
        ++exposed.checked;
        const auto faces = exposed_2faces(i, nerve);
        if (faces.size() < 2) {
            fail(exposed, format_simplex(y.vertices, nerve) + " has " + std::to_string(faces.size()) +
                              " exposed 2-faces");
        }
    }

    ++high.checked;
    if (nerve.max_dimension() > 3) {
        fail(high, "nerve has " + std::to_string(nerve.count(4)) + " 4-simplices, e.g. " +
                       format_simplex(nerve.simplices(4).front().vertices, nerve));
    }

    return LemmaReport{{three, pure_weight, triangle, tetra, two_tetra, exposed, high}};
}

}  // namespace loopnerve
