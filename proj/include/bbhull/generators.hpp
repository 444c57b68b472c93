#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbhull/geometry.hpp"

namespace bbhull {

enum class Family {
    cube,
    cross,
    dwarfed_cube,
    simplex_product,
    polygon_product,
    dwarfed_polygon_product,
    cyclic,
    rand_sphere,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
    Family family = Family::cube;
    std::size_t d = 3;  // dimension
    std::size_t s = 0;  // gonality, polygon families
    std::size_t n = 0;  // point count, cyclic and rand-sphere
    std::size_t a = 0;  // simplex dimensions, simplex-product
    std::size_t b = 0;
    std::uint64_t seed = 0;
};

/// A generated instance. `polytope.facets` is filled only for families with
/// an analytic H-description; `vertex_indices` is empty when the vertex set is
/// not known in advance (rand-sphere).
struct Generated {
    std::string name;
    Polytope polytope;
    std::optional<Point> interior;               // strictly interior point, when known
    std::optional<std::size_t> dwarfing_facet;   // index into polytope.facets
};

/// Dispatches on spec.family. Throws ParameterError for invalid parameters.
Generated generate(const GeneratorSpec& spec);

/// cube, cross and simplex-product.
Generated gen_standard(const GeneratorSpec& spec);

Generated gen_cube(std::size_t d);
Generated gen_cross(std::size_t d);
Generated gen_simplex_product(std::size_t a, std::size_t b);

/// [0,1]^d cut by sum x_i <= 3/2.
Generated gen_dwarfed_cube(std::size_t d);

/// Product of d/2 copies of the s-gon given by the four inequality families.
Generated gen_polygon_product(std::size_t d, std::size_t s);

/// The product above cut by sum_k x_k <= 2s - 1 (y coordinates excluded).
/// Vertices are computed by polarity about an analytic interior point.
Generated gen_dwarfed_polygon_product(std::size_t d, std::size_t s);

/// Points (t, t^2, ..., t^d) for t = 1..n.
Generated gen_cyclic(std::size_t d, std::size_t n);

/// n points on the unit sphere, rounded to six decimals after normalization.
Generated gen_rand_sphere(std::size_t d, std::size_t n, std::uint64_t seed);

/// Facet inequalities of one s-gon factor in the (x, y) plane.
std::vector<Halfspace> polygon_halfspaces(std::size_t s);

/// Vertices of that s-gon: pairwise intersections of its edge lines that
/// satisfy every inequality, sorted lexicographically.
std::vector<Point> polygon_vertices(std::size_t s);

}  // namespace bbhull
