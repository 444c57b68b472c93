#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bbhull/geometry.hpp"

namespace bbhull {

/// Largest number of d-subsets brute_force_hull will examine.
inline constexpr std::uint64_t kBruteForceSubsetLimit = 2'000'000;

/// Exhaustive facet enumeration: every affinely independent d-subset whose
/// hyperplane leaves all points on one side yields a facet. Normals come from
/// cofactor expansion, independent of the elimination code. Returns sorted,
/// deduplicated, content-normalized halfspaces.
///
/// Throws DegenerateError for input that is not full-dimensional and
/// ParameterError when C(n, d) exceeds kBruteForceSubsetLimit.
std::vector<Halfspace> brute_force_hull(std::span<const Point> points);

/// Fixed-width bitset over vertex columns.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t count() const;
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool none() const;
    VertexSet operator&(const VertexSet& o) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rows are facets, columns are vertices. Carries the vertex coordinates so
/// face dimensions can be computed geometrically.
struct IncidenceMatrix {
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::vector<VertexSet> rows;
};

/// Builds incidences from a polytope's vertices and facets. Throws Error if a
/// facet has fewer than dim incident vertices or two facets have equal rows.
IncidenceMatrix incidence_matrix(const Polytope& p);

/// f-vector (f_0, ..., f_{dim-1}) by closing the facet rows under
/// intersection. Throws Error when a face's affine dimension is inconsistent.
std::vector<std::size_t> enumerate_faces(const IncidenceMatrix& inc, std::size_t dim);

struct ValidationReport {
    Rational volume_total;
    Rational hull_volume;
    std::map<std::size_t, std::size_t> ridge_histogram;  // cells per (d-1)-simplex -> count
    bool cells_ok = true;     // every cell full-dimensional
    bool boundary_ok = true;  // every (d-1)-simplex interior or on a facet
    bool cover_ok = true;     // volumes add up to the hull volume
    bool vertices_ok = true;  // cells use vertices of the polytope only
    std::vector<std::string> mismatches;

    bool valid() const { return cells_ok && boundary_ok && cover_ok && vertices_ok; }
};

/// Checks that t triangulates the hull of p's point list. t and p share their
/// point list. Lower-dimensional input is checked inside its affine span.
ValidationReport validate_triangulation(const Triangulation& t, const Polytope& p);

/// Volume of the hull of a full-dimensional point list, summed over a placing
/// triangulation in lexicographic order. Throws DegenerateError otherwise.
Rational hull_volume(std::span<const Point> points);

}  // namespace bbhull
