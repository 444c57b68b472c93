#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbhull/geometry.hpp"

namespace bbhull {

/// Contents of a POLY file:
///
///     POLY <d>
///     V <n>          n lines of d rationals
///     H <m>          m lines "a0 a1 ... ad" meaning a0 + a.x >= 0
///
/// Both sections are optional but at least one must be present. `#` starts a
/// comment; blank lines are ignored.
struct PolyData {
    std::size_t dim = 0;
    std::optional<std::vector<Point>> points;
    std::optional<std::vector<Halfspace>> halfspaces;

    friend bool operator==(const PolyData&, const PolyData&) = default;
};

PolyData parse_poly(std::istream& in);
PolyData parse_poly(std::string_view text);
PolyData read_poly_file(const std::filesystem::path& path);

/// Canonical form: lowest terms, single spaces, LF endings, V before H.
void write_poly(std::ostream& out, const PolyData& data);
std::string poly_to_string(const PolyData& data);
void write_poly_file(const std::filesystem::path& path, const PolyData& data);

/// Triangulation files:
///
///     TRIANGULATION <d>
///     CELLS <t>
///     i_0 ... i_d    (t lines, indices into the matching POLY point list)
void write_triangulation(std::ostream& out, const Triangulation& t);

/// Reads cells only; the caller attaches the point list.
Triangulation parse_triangulation(std::istream& in);
Triangulation read_triangulation_file(const std::filesystem::path& path);

}  // namespace bbhull
