#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "loopnerve/homology.hpp"
#include "loopnerve/nerve.hpp"
#include "loopnerve/spectrum.hpp"
#include "loopnerve/structures.hpp"

namespace loopnerve {

using Json = nlohmann::ordered_json;

/// Malformed input text; line and column are 1-based (0 when unknown).
class InputError : public std::runtime_error {
public:
    InputError(int line, int column, const std::string& what);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two dot-bracket lines of equal length (S, then T); trailing whitespace
/// is stripped and anything after the second line is ignored.
BiSecondaryStructure parse_bis(std::string_view text);

/// {"n": int, "s_arcs": [[i,j],...], "t_arcs": [[i,j],...]}, 1-based.
BiSecondaryStructure parse_arc_list_json(std::string_view text);

/// Dispatches on content: a leading '{' selects the JSON arc list.
BiSecondaryStructure parse_pair(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
BiSecondaryStructure load_pair(const std::filesystem::path& path);

std::string format_bis(const BiSecondaryStructure& r);

/// One line per simplex, `d w v0 v1 ...`, vertices arranged by the order.
std::string export_complex(const NerveComplex& nerve, const SimplicialOrder& order);

/// [{id, owner, max_arc: [i, j], intervals: [[a, b], ...]}, ...]
Json loop_table_json(const NerveComplex& nerve);

Json homology_json(const NerveComplex& nerve, const HomologyResult& h, const FilteredHomology& spectrum);

/// One `dim t_birth t_death` line per bar.
std::string bars_text(const std::vector<Bar>& bars);

/// One `t b0 b1 b2 b3` line per level, descending t.
std::string levels_text(const FilteredHomology& spectrum);

}  // namespace loopnerve
