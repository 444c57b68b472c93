#include "bbhull/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "bbhull/beneath_beyond.hpp"

namespace bbhull {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::cube, "cube"},
    {Family::cross, "cross"},
    {Family::dwarfed_cube, "dwarfed-cube"},
    {Family::simplex_product, "simplex-product"},
    {Family::polygon_product, "polygon-product"},
    {Family::dwarfed_polygon_product, "dwarfed-polygon-product"},
    {Family::cyclic, "cyclic"},
    {Family::rand_sphere, "rand-sphere"},
}};

Halfspace make_halfspace(Rational offset, Vector normal) {
    Halfspace h{std::move(offset), std::move(normal)};
    h.normalize();
    return h;
}

Point unit(std::size_t d, std::size_t i) {
    Point p(d, Rational(0));
    p[i] = 1;
    return p;
}

std::vector<Index> all_indices(std::size_t n) {
    std::vector<Index> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<Index>(i);
    }
    return v;
}

void check_polygon_params(std::size_t d, std::size_t s) {
    if (d < 4 || d % 2 != 0) {
        throw ParameterError("polygon products need an even dimension d >= 4");
    }
    if (s < 3) {
        throw ParameterError("polygon products need s >= 3");
    }
}

// Inequalities of the product of d/2 s-gons, factor k acting on (x_k, y_k) =
// coordinates (2k, 2k+1).
std::vector<Halfspace> polygon_product_halfspaces(std::size_t d, std::size_t s) {
    const std::vector<Halfspace> factor = polygon_halfspaces(s);
    std::vector<Halfspace> out;
    for (std::size_t k = 0; k < d / 2; ++k) {
        for (const auto& h : factor) {
            Vector normal(d, Rational(0));
            normal[2 * k] = h.normal[0];
            normal[2 * k + 1] = h.normal[1];
            out.push_back(make_halfspace(h.offset, std::move(normal)));
        }
    }
    return out;
}

Point polygon_product_interior(std::size_t d) {
    const Rational c = Rational(1) / Rational(d);  // 1 / (2 delta)
    return Point(d, c);
}

double uniform_open01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Kinderman-Monahan ratio-of-uniforms sampler for the standard normal.
double standard_normal(std::mt19937_64& rng) {
    constexpr double kScale = 1.7155277699214135;  // sqrt(8 / e)
    for (;;) {
        const double u = uniform_open01(rng);
        const double v = kScale * (uniform_open01(rng) - 0.5);
        const double x = v / u;
        if (x * x <= -4.0 * std::log(u)) {
            return x;
        }
    }
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (fam == f) {
            return name;
        }
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames) {
        if (n == name) {
            return fam;
        }
    }
    return std::nullopt;
}

Generated generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::cube:
        case Family::cross:
        case Family::simplex_product:
            return gen_standard(spec);
        case Family::dwarfed_cube:
            return gen_dwarfed_cube(spec.d);
        case Family::polygon_product:
            return gen_polygon_product(spec.d, spec.s);
        case Family::dwarfed_polygon_product:
            return gen_dwarfed_polygon_product(spec.d, spec.s);
        case Family::cyclic:
            return gen_cyclic(spec.d, spec.n);
        case Family::rand_sphere:
            return gen_rand_sphere(spec.d, spec.n, spec.seed);
    }
    throw ParameterError("unknown family");
}

Generated gen_standard(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::cube:
            return gen_cube(spec.d);
        case Family::cross:
            return gen_cross(spec.d);
        case Family::simplex_product:
            return gen_simplex_product(spec.a, spec.b);
        default:
            throw ParameterError("gen_standard handles cube, cross and simplex-product only");
    }
}

Generated gen_cube(std::size_t d) {
    if (d < 1 || d > 20) {
        throw ParameterError("cube dimension must be in 1..20");
    }
    Generated g;
    g.name = "cube-d" + std::to_string(d);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Point x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = (mask >> i) & 1U;
        }
        p.points.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < d; ++i) {
        p.facets.push_back({make_halfspace(0, unit(d, i)), {}});
        Vector neg(d, Rational(0));
        neg[i] = -1;
        p.facets.push_back({make_halfspace(1, std::move(neg)), {}});
    }
    p.vertex_indices = all_indices(p.points.size());
    fill_incidences(p);
    g.interior = Point(d, Rational(1, 2));
    return g;
}

Generated gen_cross(std::size_t d) {
    if (d < 1) {
        throw ParameterError("cross polytope dimension must be positive");
    }
    Generated g;
    g.name = "cross-d" + std::to_string(d);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
        p.points.push_back(unit(d, i));
        Point m(d, Rational(0));
        m[i] = -1;
        p.points.push_back(std::move(m));
    }
    p.vertex_indices = all_indices(p.points.size());
    g.interior = Point(d, Rational(0));
    return g;
}

Generated gen_simplex_product(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) {
        throw ParameterError("simplex product needs a, b >= 1");
    }
    const std::size_t d = a + b + 2;
    Generated g;
    g.name = "simplex-product-" + std::to_string(a) + "x" + std::to_string(b);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = a + b;
    for (std::size_t i = 0; i <= a; ++i) {
        for (std::size_t j = 0; j <= b; ++j) {
            Point x(d, Rational(0));
            x[i] = 1;
            x[a + 1 + j] = 1;
            p.points.push_back(std::move(x));
        }
    }
    Vector first(d, Rational(0));
    Vector second(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        (i <= a ? first : second)[i] = 1;
    }
    p.affine_hull.push_back(Halfspace{-1, first}.normalize_as_equation());
    p.affine_hull.push_back(Halfspace{-1, second}.normalize_as_equation());
    p.vertex_indices = all_indices(p.points.size());
    return g;
}

Generated gen_dwarfed_cube(std::size_t d) {
    if (d < 2) {
        throw ParameterError("dwarfed cube needs d >= 2");
    }
    Generated g;
    g.name = "dwarfed-cube-d" + std::to_string(d);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    p.points.emplace_back(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        p.points.push_back(unit(d, i));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i != j) {
                Point x = unit(d, i);
                x[j] = Rational(1, 2);
                p.points.push_back(std::move(x));
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        p.facets.push_back({make_halfspace(0, unit(d, i)), {}});
        Vector neg(d, Rational(0));
        neg[i] = -1;
        p.facets.push_back({make_halfspace(1, std::move(neg)), {}});
    }
    p.facets.push_back({make_halfspace(Rational(3, 2), Vector(d, Rational(-1))), {}});
    g.dwarfing_facet = p.facets.size() - 1;
    p.vertex_indices = all_indices(p.points.size());
    fill_incidences(p);
    g.interior = Point(d, Rational(1) / Rational(d + 1));
    return g;
}

std::vector<Halfspace> polygon_halfspaces(std::size_t s) {
    if (s < 3) {
        throw ParameterError("polygon needs s >= 3");
    }
    const Rational sq(s);
    std::vector<Halfspace> out;
    out.push_back(make_halfspace(0, {0, 1}));     // y >= 0
    out.push_back(make_halfspace(0, {sq, -1}));  // s x - y >= 0
    for (std::size_t i = 0; i + 4 <= s; ++i) {
        const Rational c(2 * i + 1);
        const Rational ir(i);
        const Rational rhs = c * (sq + ir) - ir * ir + sq * sq;
        out.push_back(make_halfspace(rhs, {-c, -1}));
    }
    const Rational c = Rational(2) * sq - Rational(3);
    out.push_back(make_halfspace(Rational(2) * sq * c, {-c, -1}));
    return out;
}

std::vector<Point> polygon_vertices(std::size_t s) {
    const std::vector<Halfspace> hs = polygon_halfspaces(s);
    std::set<Point> found;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const Matrix a{{hs[i].normal[0], hs[i].normal[1]}, {hs[j].normal[0], hs[j].normal[1]}};
            const SolveResult r = solve_linear(a, {-hs[i].offset, -hs[j].offset});
            if (r.status != SolveStatus::unique) {
                continue;
            }
            if (std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return evaluate(h, r.solution).sign() >= 0; })) {
                found.insert(r.solution);
            }
        }
    }
    return {found.begin(), found.end()};
}

Generated gen_polygon_product(std::size_t d, std::size_t s) {
    check_polygon_params(d, s);
    const std::size_t delta = d / 2;
    const std::vector<Point> factor = polygon_vertices(s);
    Generated g;
    g.name = "polygon-product-d" + std::to_string(d) + "-s" + std::to_string(s);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    std::vector<std::size_t> digit(delta, 0);
    for (;;) {
        Point x(d);
        for (std::size_t k = 0; k < delta; ++k) {
            x[2 * k] = factor[digit[k]][0];
            x[2 * k + 1] = factor[digit[k]][1];
        }
        p.points.push_back(std::move(x));
        std::size_t k = delta;
        while (k > 0 && ++digit[k - 1] == factor.size()) {
            digit[k - 1] = 0;
            --k;
        }
        if (k == 0) {
            break;
        }
    }
    for (auto& h : polygon_product_halfspaces(d, s)) {
        p.facets.push_back({std::move(h), {}});
    }
    p.vertex_indices = all_indices(p.points.size());
    fill_incidences(p);
    g.interior = polygon_product_interior(d);
    return g;
}

Generated gen_dwarfed_polygon_product(std::size_t d, std::size_t s) {
    check_polygon_params(d, s);
    Generated g;
    g.name = "dwarfed-polygon-product-d" + std::to_string(d) + "-s" + std::to_string(s);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    for (auto& h : polygon_product_halfspaces(d, s)) {
        p.facets.push_back({std::move(h), {}});
    }
    Vector cut(d, Rational(0));
    for (std::size_t k = 0; k < d / 2; ++k) {
        cut[2 * k] = -1;
    }
    p.facets.push_back({make_halfspace(Rational(2 * s) - Rational(1), std::move(cut)), {}});
    g.dwarfing_facet = p.facets.size() - 1;
    g.interior = polygon_product_interior(d);

    const auto hs = p.halfspaces();
    p.points = vertices_via_polarity(hs, *g.interior);
    std::sort(p.points.begin(), p.points.end());
    p.vertex_indices = all_indices(p.points.size());
    fill_incidences(p);
    return g;
}

Generated gen_cyclic(std::size_t d, std::size_t n) {
    if (d < 1) {
        throw ParameterError("cyclic polytope needs d >= 1");
    }
    if (n < d + 1) {
        throw ParameterError("cyclic polytope needs n >= d + 1");
    }
    Generated g;
    g.name = "cyclic-d" + std::to_string(d) + "-n" + std::to_string(n);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    for (std::size_t t = 1; t <= n; ++t) {
        Point x(d);
        Integer power = 1;
        for (std::size_t i = 0; i < d; ++i) {
            power *= static_cast<unsigned long>(t);
            x[i] = Rational(power);
        }
        p.points.push_back(std::move(x));
    }
    p.vertex_indices = all_indices(n);
    return g;
}

Generated gen_rand_sphere(std::size_t d, std::size_t n, std::uint64_t seed) {
    if (d < 2) {
        throw ParameterError("rand-sphere needs d >= 2");
    }
    if (n < d + 1) {
        throw ParameterError("rand-sphere needs n >= d + 1");
    }
    Generated g;
    g.name = "rand-sphere-d" + std::to_string(d) + "-n" + std::to_string(n) + "-seed" + std::to_string(seed);
    Polytope& p = g.polytope;
    p.ambient_dim = d;
    p.dim = d;
    std::mt19937_64 rng(seed);
    const Integer million = 1000000;
    std::set<Point> seen;
    std::vector<double> v(d);
    while (p.points.size() < n) {
        double norm2 = 0.0;
        for (auto& c : v) {
            c = standard_normal(rng);
            norm2 += c * c;
        }
        if (norm2 == 0.0) {
            continue;
        }
        const double norm = std::sqrt(norm2);
        Point x(d);
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i) {
            const long long k = std::llround(v[i] / norm * 1e6);
            x[i] = Rational(Integer(static_cast<long>(k)), million);
            nonzero = nonzero || k != 0;
        }
        if (!nonzero || !seen.insert(x).second) {
            continue;
        }
        p.points.push_back(std::move(x));
    }
    g.interior = std::nullopt;
    return g;
}

}  // namespace bbhull
