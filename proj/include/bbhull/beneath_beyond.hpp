#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bbhull/geometry.hpp"

namespace bbhull {

// ---------------------------------------------------------------------------
// Insertion orders

enum class OrderKind { given, random, lexicographic };

struct InsertionOrder {
    OrderKind kind = OrderKind::given;
    std::uint64_t seed = 0;

    static InsertionOrder given() { return {OrderKind::given, 0}; }
    static InsertionOrder random(std::uint64_t seed) { return {OrderKind::random, seed}; }
    static InsertionOrder lexicographic() { return {OrderKind::lexicographic, 0}; }

    /// Permutation of 0..points.size()-1. Lexicographic sorts coordinates
    /// ascending; ties keep input order.
    std::vector<Index> permutation(std::span<const Point> points) const;

    std::string describe() const;
};

/// Portable Fisher-Yates shuffle driven by mt19937_64, so a seed yields the
/// same permutation on every platform.
std::vector<Index> random_permutation(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Statistics

struct StepRecord {
    std::size_t inserted = 0;  // n_k: points placed so far
    std::size_t facets = 0;    // m_k: live facets after the step
    std::size_t cells = 0;     // t_k: maximal cells after the step
    std::size_t created = 0;   // cells created by this step
};

struct HullStats {
    std::vector<StepRecord> steps;
    std::uint64_t evaluations = 0;        // halfspace-point scalar products
    std::uint64_t simplices_created = 0;  // maximal cells ever created
    std::size_t star_of_last = 0;         // cells containing the last placed point

    /// t_k nondecreasing and m_k <= (d+1) t_k over all steps.
    bool satisfies_bounds(std::size_t d) const;
};

// ---------------------------------------------------------------------------
// Incremental state

using FacetId = std::uint32_t;
using BoundaryId = std::uint32_t;

struct Facet {
    Halfspace halfspace;
    std::vector<Index> incident;  // inserted points on the hyperplane, sorted
    bool alive = false;
};

struct BoundaryCell {
    Simplex simplex;  // (d-1)-simplex on the boundary
    FacetId owner = 0;
    bool alive = false;
};

enum class SearchMode { breadth_first, full_scan };

/// Beneath-and-beyond state over a fixed, full-dimensional point list.
///
/// Holds the placing triangulation of the points inserted so far, the facets
/// of their hull, and the boundary (d-1)-cells of the triangulation, each
/// owned by the facet whose hyperplane contains it. Boundary cells sharing a
/// (d-2)-face are linked through a ridge table; that table is the dual graph
/// used to grow the set of violated facets.
class HullState {
public:
    /// Starts from the first d+1 affinely independent points of `order`.
    /// Dependent points met on the way are deferred and become the next points
    /// to place, in their original relative order. Throws DegenerateError if the
    /// points do not span their ambient space.
    static HullState initial_simplex(std::vector<Point> points, std::vector<Index> order);

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& points() const { return points_; }

    bool has_pending() const { return next_ < pending_.size(); }
    std::span<const Index> pending() const { return std::span(pending_).subspan(next_); }

    /// Places the next point of the insertion order.
    void place_next();

    /// Places point `i` of the point list.
    void place(Index i);

    /// Appends a new point and places it; returns its index.
    Index place_point(const Point& x);

    /// Facets whose halfspace is strictly violated by x.
    std::vector<FacetId> find_violated(const Point& x, SearchMode mode = SearchMode::breadth_first);

    std::vector<FacetId> live_facets() const;
    const Facet& facet(FacetId id) const { return facets_[id].facet; }
    std::size_t facet_count() const { return live_facet_count_; }

    std::vector<BoundaryCell> boundary() const;
    const std::vector<Simplex>& cells() const { return cells_; }
    Triangulation triangulation() const;

    const HullStats& stats() const { return stats_; }

    /// Self-check of the structural invariants; returns a list of problems
    /// (empty when consistent). Linear in (points x facets).
    std::vector<std::string> verify() const;

    SearchMode search_mode = SearchMode::breadth_first;

private:
    struct FacetSlot {
        Facet facet;
        IntVector coeffs;  // integer (a0, a)
        std::vector<BoundaryId> cells;
        std::uint64_t stamp = 0;
        int sign = 0;
        bool violated = false;
    };

    struct BoundarySlot {
        std::vector<Index> simplex;
        FacetId owner = 0;
        bool alive = false;
    };

    using Key = std::vector<Index>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    static constexpr BoundaryId kNone = ~BoundaryId{0};
    using RidgeEntry = std::array<BoundaryId, 2>;

    HullState() = default;

    FacetId new_facet(IntVector coeffs);
    void retire_facet(FacetId f);
    BoundaryId add_boundary(std::vector<Index> simplex, FacetId owner);
    void remove_boundary(BoundaryId b);
    BoundaryId across(BoundaryId b, const Key& ridge) const;
    void record_step(std::size_t created);

    std::size_t dim_ = 0;
    std::vector<Point> points_;
    std::vector<IntVector> homogeneous_;
    std::vector<Index> pending_;
    std::size_t next_ = 0;
    std::size_t inserted_ = 0;
    std::vector<char> placed_;

    std::vector<FacetSlot> facets_;
    std::vector<FacetId> free_facets_;
    std::size_t live_facet_count_ = 0;

    std::vector<BoundarySlot> boundary_;
    std::vector<BoundaryId> free_boundary_;
    std::unordered_map<Key, RidgeEntry, KeyHash> ridges_;

    std::vector<Simplex> cells_;
    HullStats stats_;
    std::uint64_t stamp_ = 0;
};

// ---------------------------------------------------------------------------
// Drivers

/// Algorithm-1 facet extraction: every (d-1)-face of the triangulation whose
/// hyperplane does not separate the points yields a facet. Returns the sorted,
/// deduplicated, content-normalized halfspaces (lifted back for
/// lower-dimensional input).
std::vector<Halfspace> extract_facets(const Triangulation& t, std::span<const Point> points);

struct HullResult {
    Polytope polytope;
    Triangulation triangulation;
    HullStats stats;
};

/// Complete convex hull of an arbitrary nonempty point list. Reduces to the
/// affine span, runs the incremental algorithm in `order`, and lifts the
/// facets back. Facets are sorted; vertex indices are sorted and refer to the
/// first occurrence of each distinct point.
HullResult convex_hull(std::span<const Point> points, const InsertionOrder& order = InsertionOrder::given());

/// Same, with an explicit permutation.
HullResult convex_hull(std::span<const Point> points, std::span<const Index> permutation);

/// A point is a vertex of the hull iff the facets through it have normals
/// spanning the space.
std::vector<Index> vertices_from_facets(std::span<const Point> points, std::span<const Halfspace> facets,
                                        std::size_t dim);

/// Thrown by caratheodory() when the query point is outside the hull.
class OutsideHullError : public Error {
public:
    OutsideHullError(Halfspace witness, Rational value)
        : Error("point lies outside the convex hull"), witness_(std::move(witness)), value_(std::move(value)) {}

    const Halfspace& witness() const { return witness_; }
    const Rational& value() const { return value_; }

private:
    Halfspace witness_;
    Rational value_;
};

struct CaratheodoryResult {
    std::vector<Index> indices;  // affinely independent, dim + 1 of them
    Vector barycentric;          // same length, nonnegative, sums to one
};

/// Finds a cell of the placing triangulation containing p and p's barycentric
/// coordinates in it.
CaratheodoryResult caratheodory(std::span<const Point> points, const Point& p,
                                const InsertionOrder& order = InsertionOrder::given());

/// Vertices of the bounded polyhedron { x : h(x) >= 0 for all h } computed by
/// polarity about a strictly interior point.
std::vector<Point> vertices_via_polarity(std::span<const Halfspace> halfspaces, const Point& interior);

}  // namespace bbhull
