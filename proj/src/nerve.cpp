#include "loopnerve/nerve.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace loopnerve {

namespace {

void post_order_visit(const ArcPoset& poset, std::size_t arc, SiblingOrder siblings,
                      std::vector<std::size_t>& out) {
    const auto& kids = poset.children[arc];
    if (siblings == SiblingOrder::LeftToRight) {
        for (int c : kids) post_order_visit(poset, static_cast<std::size_t>(c), siblings, out);
    } else {
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            post_order_visit(poset, static_cast<std::size_t>(*it), siblings, out);
        }
    }
    out.push_back(arc);
}

std::vector<std::size_t> post_order_arcs(const ArcPoset& poset, SiblingOrder siblings) {
    std::vector<std::size_t> out;
    out.reserve(poset.size());
    post_order_visit(poset, 0, siblings, out);
    return out;
}

}  // namespace

NerveComplex NerveComplex::build(const BiSecondaryStructure& r) {
    NerveComplex k;
    k.structure_ = r;
    k.s_poset_ = arc_poset(r.s);
    k.t_poset_ = arc_poset(r.t);
    k.incidence_.resize(static_cast<std::size_t>(r.length()) + 2);

    for (Owner owner : {Owner::S, Owner::T}) {
        const ArcPoset& poset = k.poset(owner);
        std::vector<Loop> owned = loopnerve::loops(r.get(owner), owner);
        auto& arc_to_loop = owner == Owner::S ? k.s_arc_to_loop_ : k.t_arc_to_loop_;
        arc_to_loop.assign(poset.size(), 0);
        for (std::size_t arc : post_order_arcs(poset, SiblingOrder::LeftToRight)) {
            const auto id = static_cast<std::uint32_t>(k.loops_.size());
            arc_to_loop[arc] = id;
            for (const Interval& iv : owned[arc].intervals) {
                for (int v = iv.lo; v <= iv.hi; ++v) {
                    k.incidence_[static_cast<std::size_t>(v)].push_back(LoopId{id});
                }
            }
            k.loops_.push_back(LoopEntry{std::move(owned[arc]), arc});
        }
    }

    std::map<std::vector<LoopId>, std::vector<int>> witnessed;
    for (std::size_t v = 0; v < k.incidence_.size(); ++v) {
        auto& here = k.incidence_[v];
        std::sort(here.begin(), here.end());
        const std::size_t m = here.size();
        if (m >= 8 * sizeof(unsigned long) - 1) {
            throw std::logic_error("backbone vertex lies in too many loops");
        }
        for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
            std::vector<LoopId> key;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1UL << i)) key.push_back(here[i]);
            }
            witnessed[std::move(key)].push_back(static_cast<int>(v));
        }
    }

    for (auto& [vertices, omega] : witnessed) {
        const std::size_t d = vertices.size() - 1;
        if (k.strata_.size() <= d) k.strata_.resize(d + 1);
        k.strata_[d].push_back(Simplex{vertices, std::move(omega)});
    }
    k.index_strata();
    return k;
}

void NerveComplex::index_strata() {
    for (auto& stratum : strata_) {
        std::sort(stratum.begin(), stratum.end(),
                  [](const Simplex& a, const Simplex& b) { return a.vertices < b.vertices; });
    }
    while (!strata_.empty() && strata_.back().empty()) strata_.pop_back();
    lookup_.assign(strata_.size(), {});
    for (std::size_t d = 0; d < strata_.size(); ++d) {
        for (std::size_t i = 0; i < strata_[d].size(); ++i) lookup_[d].emplace(strata_[d][i].vertices, i);
    }
}

LoopId NerveComplex::loop_of_arc(Owner owner, std::size_t arc_index) const {
    const auto& table = owner == Owner::S ? s_arc_to_loop_ : t_arc_to_loop_;
    return LoopId{table.at(arc_index)};
}

std::optional<LoopId> NerveComplex::parent(LoopId id) const {
    const LoopEntry& e = loops_[id.value];
    const int p = poset(e.loop.owner).parent[e.arc_index];
    if (p < 0) return std::nullopt;
    return loop_of_arc(e.loop.owner, static_cast<std::size_t>(p));
}

std::vector<LoopId> NerveComplex::children(LoopId id) const {
    const LoopEntry& e = loops_[id.value];
    std::vector<LoopId> out;
    for (int c : poset(e.loop.owner).children[e.arc_index]) {
        out.push_back(loop_of_arc(e.loop.owner, static_cast<std::size_t>(c)));
    }
    return out;
}

const std::vector<Simplex>& NerveComplex::simplices(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d >= static_cast<int>(strata_.size())) return none;
    return strata_[static_cast<std::size_t>(d)];
}

std::size_t NerveComplex::total_count() const {
    std::size_t total = 0;
    for (const auto& s : strata_) total += s.size();
    return total;
}

std::optional<std::size_t> NerveComplex::find(std::span<const LoopId> vertices) const {
    if (vertices.empty() || vertices.size() > lookup_.size()) return std::nullopt;
    const auto& table = lookup_[vertices.size() - 1];
    auto it = table.find(std::vector<LoopId>(vertices.begin(), vertices.end()));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

NerveComplex NerveComplex::filtered(int min_weight) const {
    NerveComplex out;
    out.structure_ = structure_;
    out.s_poset_ = s_poset_;
    out.t_poset_ = t_poset_;
    out.loops_ = loops_;
    out.s_arc_to_loop_ = s_arc_to_loop_;
    out.t_arc_to_loop_ = t_arc_to_loop_;
    out.incidence_ = incidence_;
    out.strata_.resize(strata_.size());
    for (std::size_t d = 0; d < strata_.size(); ++d) {
        for (const Simplex& s : strata_[d]) {
            if (s.weight() >= min_weight) out.strata_[d].push_back(s);
        }
    }
    out.index_strata();
    return out;
}

SimplicialOrder::SimplicialOrder(std::vector<LoopId> sequence) : sequence_(std::move(sequence)) {
    rank_.assign(sequence_.size(), 0);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        if (sequence_[i].value >= rank_.size()) {
            throw std::invalid_argument("simplicial order is not a permutation of loop ids");
        }
        rank_[sequence_[i].value] = i;
    }
}

SimplicialOrder SimplicialOrder::from_sequence(std::vector<LoopId> sequence) {
    return SimplicialOrder(std::move(sequence));
}

SimplicialOrder SimplicialOrder::post_order(const NerveComplex& nerve, SiblingOrder siblings) {
    std::vector<LoopId> seq;
    seq.reserve(nerve.loop_count());
    for (Owner owner : {Owner::S, Owner::T}) {
        for (std::size_t arc : post_order_arcs(nerve.poset(owner), siblings)) {
            seq.push_back(nerve.loop_of_arc(owner, arc));
        }
    }
    return SimplicialOrder(std::move(seq));
}

SimplicialOrder SimplicialOrder::random_extension(const NerveComplex& nerve, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<LoopId> seq;
    seq.reserve(nerve.loop_count());
    for (Owner owner : {Owner::S, Owner::T}) {
        const ArcPoset& poset = nerve.poset(owner);
        std::vector<std::size_t> waiting(poset.size());
        std::vector<std::size_t> ready;
        for (std::size_t a = 0; a < poset.size(); ++a) {
            waiting[a] = poset.children[a].size();
            if (waiting[a] == 0) ready.push_back(a);
        }
        while (!ready.empty()) {
            const std::size_t pick = static_cast<std::size_t>(rng() % ready.size());
            const std::size_t arc = ready[pick];
            ready[pick] = ready.back();
            ready.pop_back();
            seq.push_back(nerve.loop_of_arc(owner, arc));
            const int p = poset.parent[arc];
            if (p >= 0 && --waiting[static_cast<std::size_t>(p)] == 0) {
                ready.push_back(static_cast<std::size_t>(p));
            }
        }
    }
    return SimplicialOrder(std::move(seq));
}

std::vector<LoopId> SimplicialOrder::arrange(std::span<const LoopId> vertices) const {
    std::vector<LoopId> out(vertices.begin(), vertices.end());
    std::sort(out.begin(), out.end(), [this](LoopId a, LoopId b) { return rank(a) < rank(b); });
    return out;
}

bool SimplicialOrder::is_compliant(const NerveComplex& nerve) const {
    if (sequence_.size() != nerve.loop_count()) return false;
    for (std::size_t i = 0; i < nerve.loop_count(); ++i) {
        const LoopId id{static_cast<std::uint32_t>(i)};
        if (auto p = nerve.parent(id); p && rank(id) >= rank(*p)) return false;
    }
    std::size_t last_s = 0;
    std::size_t first_t = sequence_.size();
    bool any_s = false;
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        if (nerve.owner(sequence_[i]) == Owner::S) {
            last_s = i;
            any_s = true;
        } else {
            first_t = std::min(first_t, i);
        }
    }
    return !any_s || last_s < first_t;
}

EdgeKind classify_1simplex(const Simplex& edge, const NerveComplex& nerve) {
    if (edge.dim() != 1) throw std::invalid_argument("classify_1simplex requires a 1-simplex");
    return nerve.owner(edge.vertices[0]) == nerve.owner(edge.vertices[1]) ? EdgeKind::Pure
                                                                          : EdgeKind::Mixed;
}

std::vector<std::vector<LoopId>> facets(std::span<const LoopId> vertices) {
    std::vector<std::vector<LoopId>> out;
    if (vertices.size() < 2) return out;
    for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
        std::vector<LoopId> f;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i != skip) f.push_back(vertices[i]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::size_t> exposed_2faces(std::size_t tetrahedron, const NerveComplex& nerve) {
    const auto& k3 = nerve.simplices(3);
    const Simplex& y = k3.at(tetrahedron);
    std::vector<std::size_t> out;
    for (const auto& face : facets(y.vertices)) {
        bool shared = false;
        for (std::size_t other = 0; other < k3.size() && !shared; ++other) {
            if (other == tetrahedron) continue;
            shared = std::includes(k3[other].vertices.begin(), k3[other].vertices.end(),
                                   face.begin(), face.end());
        }
        if (!shared) out.push_back(*nerve.find(face));
    }
    return out;
}

}  // namespace loopnerve
