#include "loopnerve/io.hpp"

#include <fstream>
#include <sstream>

namespace loopnerve {

InputError::InputError(int line, int column, const std::string& what)
    : std::runtime_error(what), line_(line), column_(column) {}

namespace {

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

SecondaryStructure parse_line(std::string_view line, int line_no) {
    try {
        return parse_dot_bracket(line);
    } catch (const StructureError& e) {
        throw InputError(line_no, e.position(),
                         "line " + std::to_string(line_no) + ", column " + std::to_string(e.position()) +
                             ": " + to_string(e.kind()) + ": " + e.what());
    }
}

Json coefficient_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return c.convert_to<std::int64_t>();
    }
    return c.str();
}

Json betti_json(const std::vector<std::size_t>& betti) {
    Json out = Json::array();
    for (std::size_t d = 0; d < 4; ++d) out.push_back(d < betti.size() ? betti[d] : 0);
    return out;
}

}  // namespace

BiSecondaryStructure parse_bis(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (lines.size() < 2 && start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(rstrip(text.substr(start, end - start)));
        start = end + 1;
    }
    for (std::size_t i = 0; i < 2; ++i) {
        if (i >= lines.size() || lines[i].empty()) {
            throw InputError(static_cast<int>(i) + 1, 1,
                             "line " + std::to_string(i + 1) + ": expected a non-empty dot-bracket line");
        }
    }
    SecondaryStructure s = parse_line(lines[0], 1);
    SecondaryStructure t = parse_line(lines[1], 2);
    if (s.length() != t.length()) {
        throw InputError(2, static_cast<int>(std::min(lines[0].size(), lines[1].size())) + 1,
                         "line 2: length " + std::to_string(t.length()) + " differs from line 1 length " +
                             std::to_string(s.length()));
    }
    return BiSecondaryStructure(std::move(s), std::move(t));
}

BiSecondaryStructure parse_arc_list_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(0, static_cast<int>(e.byte), std::string("invalid JSON: ") + e.what());
    }
    try {
        const int n = doc.at("n").get<int>();
        auto arcs_of = [&](const char* key) {
            std::vector<Arc> arcs;
            for (const auto& pair : doc.at(key)) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw InputError(0, 0, std::string(key) + ": each arc must be a pair [i, j]");
                }
                arcs.push_back(Arc{pair[0].get<int>(), pair[1].get<int>()});
            }
            return arcs;
        };
        try {
            return BiSecondaryStructure(validate_arcs(n, arcs_of("s_arcs")), validate_arcs(n, arcs_of("t_arcs")));
        } catch (const StructureError& e) {
            throw InputError(0, 0, std::string(to_string(e.kind())) + ": " + e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(0, 0, std::string("malformed arc list: ") + e.what());
    }
}

BiSecondaryStructure parse_pair(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_arc_list_json(text);
    return parse_bis(text);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("cannot write " + path.string());
}

BiSecondaryStructure load_pair(const std::filesystem::path& path) { return parse_pair(read_file(path)); }

std::string format_bis(const BiSecondaryStructure& r) {
    return r.s.to_dot_bracket() + "\n" + r.t.to_dot_bracket() + "\n";
}

std::string export_complex(const NerveComplex& nerve, const SimplicialOrder& order) {
    std::ostringstream os;
    for (int d = 0; d <= nerve.max_dimension(); ++d) {
        for (const Simplex& s : nerve.simplices(d)) {
            os << d << ' ' << s.weight();
            for (LoopId id : order.arrange(s.vertices)) os << ' ' << id.value;
            os << '\n';
        }
    }
    return os.str();
}

Json loop_table_json(const NerveComplex& nerve) {
    Json out = Json::array();
    for (std::size_t i = 0; i < nerve.loop_count(); ++i) {
        const Loop& l = nerve.loops()[i].loop;
        Json intervals = Json::array();
        for (const Interval& iv : l.intervals) intervals.push_back({iv.lo, iv.hi});
        out.push_back(Json{{"id", i},
                           {"owner", to_string(l.owner)},
                           {"max_arc", {l.max_arc.start, l.max_arc.end}},
                           {"intervals", std::move(intervals)}});
    }
    return out;
}

Json homology_json(const NerveComplex& nerve, const HomologyResult& h, const FilteredHomology& spectrum) {
    Json doc;
    doc["n"] = nerve.length();
    doc["betti"] = betti_json(h.betti);
    Json torsion = Json::array();
    for (std::size_t d = 0; d < 4; ++d) {
        Json factors = Json::array();
        if (d < h.torsion.size()) {
            for (const BigInt& f : h.torsion[d]) factors.push_back(coefficient_json(f));
        }
        torsion.push_back(std::move(factors));
    }
    doc["torsion"] = std::move(torsion);
    doc["h2_rank"] = h.h2_rank();
    doc["euler"] = h.euler;

    Json generators = Json::array();
    Json supports = Json::array();
    for (const Chain& g : h.h2_generators) {
        Json terms = Json::array();
        for (const auto& [index, coeff] : g.terms) {
            Json simplex = Json::array();
            for (LoopId id : nerve.simplices(2)[index].vertices) simplex.push_back(id.value);
            terms.push_back(Json{{"simplex", std::move(simplex)}, {"coeff", coefficient_json(coeff)}});
        }
        generators.push_back(std::move(terms));

        const SupportReport support = generator_support(g, nerve);
        auto entries = [](const std::vector<SupportEntry>& list) {
            Json arr = Json::array();
            for (const SupportEntry& e : list) {
                arr.push_back(Json{{"id", e.id.value}, {"max_arc", {e.max_arc.start, e.max_arc.end}}});
            }
            return arr;
        };
        supports.push_back(Json{{"S", entries(support.s_loops)}, {"T", entries(support.t_loops)}});
    }
    doc["generators"] = std::move(generators);
    doc["supports"] = std::move(supports);

    Json levels = Json::object();
    for (auto it = spectrum.levels.rbegin(); it != spectrum.levels.rend(); ++it) {
        levels[std::to_string(it->first)] = betti_json(it->second);
    }
    doc["levels"] = std::move(levels);
    Json bars = Json::object();
    for (int d = 0; d < 4; ++d) bars[std::to_string(d)] = Json::array();
    for (const Bar& b : spectrum.bars) bars[std::to_string(b.dim)].push_back({b.birth, b.death});
    doc["bars"] = std::move(bars);
    return doc;
}

std::string bars_text(const std::vector<Bar>& bars) {
    std::ostringstream os;
    for (const Bar& b : bars) os << b.dim << ' ' << b.birth << ' ' << b.death << '\n';
    return os.str();
}

std::string levels_text(const FilteredHomology& spectrum) {
    std::ostringstream os;
    for (auto it = spectrum.levels.rbegin(); it != spectrum.levels.rend(); ++it) {
        os << it->first;
        for (std::size_t d = 0; d < 4; ++d) os << ' ' << it->second[d];
        os << '\n';
    }
    return os.str();
}

}  // namespace loopnerve
