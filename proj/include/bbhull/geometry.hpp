#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bbhull/linalg.hpp"

namespace bbhull {

using Point = Vector;
using Index = std::uint32_t;

/// The closed halfspace { x : offset + normal . x >= 0 }.
///
/// Facet halfspaces are kept content-normalized: all coefficients are coprime
/// integers, so equal halfspaces have equal representations. The sign is never
/// touched by normalization; it carries the orientation (interior positive).
struct Halfspace {
    Rational offset;
    Vector normal;

    std::size_t dim() const { return normal.size(); }

    /// Scales by a positive rational so that all coefficients are coprime
    /// integers. Throws DegenerateError for a zero normal.
    Halfspace& normalize();

    /// Like normalize(), then flips the sign so the first nonzero coefficient
    /// of (offset, normal...) is positive. Used for equations, where orientation
    /// carries no meaning.
    Halfspace& normalize_as_equation();

    /// Coefficients (offset, normal...) as integers; requires normalize().
    IntVector integer_coefficients() const;
    static Halfspace from_integer_coefficients(std::span<const Integer> coeffs);

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
        if (auto c = a.offset <=> b.offset; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                                      b.normal.end());
    }
};

/// A simplex given by strictly increasing indices into a point list.
struct Simplex {
    std::vector<Index> vertices;

    std::size_t dim() const { return vertices.size() - 1; }
    bool contains(Index i) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Pure simplicial complex of full-dimensional cells over a point list.
struct Triangulation {
    std::vector<Point> points;
    std::vector<Simplex> cells;
    std::size_t dim = 0;
};

struct FacetRecord {
    Halfspace halfspace;
    std::vector<Index> vertices;  // indices of the vertices lying on the facet
};

/// Combined V- and H-description. `affine_hull` lists equations (value zero on
/// every point) and is empty for full-dimensional polytopes.
struct Polytope {
    std::size_t ambient_dim = 0;
    std::vector<Point> points;
    std::vector<Index> vertex_indices;
    std::vector<FacetRecord> facets;
    std::vector<Halfspace> affine_hull;
    std::size_t dim = 0;

    std::vector<Halfspace> halfspaces() const;
    std::vector<Point> vertices() const;
};

/// Value of offset + normal . p. Positive means inside, zero on the boundary
/// hyperplane, negative violating.
Rational evaluate(const Halfspace& h, const Point& p);

struct AffineBasis {
    std::size_t dim = 0;
    std::vector<Index> indices;  // dim + 1 entries
};

/// Incremental affine span: feeds points one at a time and reports whether
/// each one enlarges the span.
class AffineSpanBuilder {
public:
    explicit AffineSpanBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// True iff p is the first point or lies outside the current span.
    bool add(const Point& p);

    /// Dimension of the span; meaningless before the first add().
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return started_ && rows_.size() == ambient_; }

private:
    std::size_t ambient_;
    bool started_ = false;
    Point origin_;
    std::vector<Vector> rows_;  // reduced directions, unit pivot at pivots_[k]
    std::vector<std::size_t> pivots_;
};

/// Greedy affine basis: scans the points in order and keeps every point that
/// enlarges the affine span. Throws DegenerateError for an empty list.
AffineBasis affine_basis(std::span<const Point> points);

/// Coordinate projection of an affine subspace onto a subset of coordinates.
///
/// `kept` holds the coordinates that stay (the pivot columns of the direction
/// space). Every other coordinate is an affine function of the kept ones on the
/// span; those relations are stored as `equations`.
struct AffineEmbedding {
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> kept;
    std::vector<Halfspace> equations;

    std::size_t dim() const { return kept.size(); }
    bool is_identity() const { return kept.size() == ambient_dim; }

    Point project(const Point& p) const;
    /// Lifts a halfspace on the kept coordinates back into the ambient space.
    Halfspace lift(const Halfspace& h) const;
    /// True iff p satisfies every equation of the span.
    bool on_span(const Point& p) const;
};

struct Projection {
    std::vector<Point> points;
    AffineEmbedding embedding;
};

Projection project_to_span(std::span<const Point> points);

/// Hyperplane through `pts` (d affinely independent points in R^d), oriented
/// so that `inside` evaluates positive, content-normalized.
Halfspace hyperplane_through(std::span<const Point> pts, const Point& inside);

/// Unsigned volume of the simplex spanned by d+1 points of R^d.
Rational simplex_volume(std::span<const Point> pts);

/// Polar dual about `interior`: every facet of `p` maps to one point, in facet
/// order. Requires a full-dimensional H-description and a strictly interior
/// point.
std::vector<Point> polar(const Polytope& p, const Point& interior);

/// Same as above for a bare list of halfspaces.
std::vector<Point> polar(std::span<const Halfspace> facets, const Point& interior);

/// Homogenized integer coordinates (w, w x_1, ..., w x_d), w > 0, primitive.
IntVector homogenize(const Point& p);

/// Sets the vertex incidences of each facet from the point list.
void fill_incidences(Polytope& p);

Point translate(const Point& p, const Point& by);

}  // namespace bbhull
