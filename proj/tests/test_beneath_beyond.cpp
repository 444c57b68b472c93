#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "bbhull/beneath_beyond.hpp"
#include "bbhull/generators.hpp"
#include "bbhull/oracle.hpp"
#include "support.hpp"

using namespace bbhull;
using namespace bbhull::testing;

namespace {

const Rational half(Integer(1), Integer(2));

std::vector<Index> iota_order(std::size_t n) {
    std::vector<Index> v(n);
    std::iota(v.begin(), v.end(), Index{0});
    return v;
}

HullState full_state(const std::vector<Point>& pts) {
    HullState s = HullState::initial_simplex(pts, iota_order(pts.size()));
    while (s.has_pending()) {
        s.place_next();
    }
    return s;
}

std::set<Halfspace> violated_halfspaces(HullState& s, const Point& x, SearchMode mode) {
    std::set<Halfspace> out;
    for (FacetId f : s.find_violated(x, mode)) {
        out.insert(s.facet(f).halfspace);
    }
    return out;
}

Rational total_volume(const Triangulation& t) {
    Rational v = 0;
    for (const auto& c : t.cells) {
        std::vector<Point> pts;
        for (Index i : c.vertices) {
            pts.push_back(t.points[i]);
        }
        v += simplex_volume(pts);
    }
    return v;
}

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

}  // namespace

TEST_CASE("random_permutation is a deterministic permutation") {
    const auto a = random_permutation(50, 123);
    const auto b = random_permutation(50, 123);
    CHECK(a == b);
    auto sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());
    CHECK(sorted_a == iota_order(50));
    CHECK(random_permutation(50, 124) != a);
    CHECK(random_permutation(0, 1).empty());
}

TEST_CASE("insertion orders") {
    const std::vector<Point> pts{{2, 0}, {1, 5}, {1, -1}, {0, 3}, {1, 5}};
    CHECK(InsertionOrder::given().permutation(pts) == iota_order(5));
    CHECK(InsertionOrder::lexicographic().permutation(pts) == std::vector<Index>{3, 2, 1, 4, 0});
    CHECK(InsertionOrder::random(9).permutation(pts) == random_permutation(5, 9));
    CHECK(InsertionOrder::given().describe() == "given");
    CHECK(InsertionOrder::random(3).describe() == "random");
    CHECK(InsertionOrder::lexicographic().describe() == "lex");
}

TEST_CASE("initial_simplex") {
    SUBCASE("unit triangle") {
        const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
        const HullState s = HullState::initial_simplex(tri, iota_order(3));
        CHECK(s.facet_count() == 3);
        CHECK(s.cells().size() == 1);
        CHECK_FALSE(s.has_pending());
        REQUIRE(s.stats().steps.size() == 1);
        CHECK(s.stats().steps[0].cells == 1);
        CHECK(s.stats().steps[0].facets == 3);
        CHECK(s.verify().empty());
    }
    SUBCASE("dependent points are deferred") {
        const std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
        const HullState s = HullState::initial_simplex(pts, iota_order(5));
        REQUIRE(s.cells().size() == 1);
        CHECK(s.cells()[0].vertices == std::vector<Index>{0, 1, 2, 4});
        CHECK(std::vector<Index>(s.pending().begin(), s.pending().end()) == std::vector<Index>{3});
    }
    SUBCASE("simplex input has d + 1 facets") {
        for (std::size_t d = 1; d <= 6; ++d) {
            std::vector<Point> pts{Point(d, Rational(0))};
            for (std::size_t i = 0; i < d; ++i) {
                Point e(d, Rational(0));
                e[i] = 1;
                pts.push_back(e);
            }
            const HullState s = HullState::initial_simplex(pts, iota_order(d + 1));
            CHECK(s.facet_count() == d + 1);
            CHECK(s.verify().empty());
        }
    }
    SUBCASE("lower-dimensional input is refused") {
        const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
        CHECK_THROWS_AS(HullState::initial_simplex(line, iota_order(3)), DegenerateError);
    }
}

TEST_CASE("find_violated on the unit square") {
    HullState s = full_state(kSquare);
    REQUIRE(s.facet_count() == 4);
    for (SearchMode mode : {SearchMode::breadth_first, SearchMode::full_scan}) {
        CHECK(violated_halfspaces(s, {2, half}, mode) == std::set<Halfspace>{Halfspace{1, {-1, 0}}});
        CHECK(violated_halfspaces(s, {2, 2}, mode) ==
              std::set<Halfspace>{Halfspace{1, {-1, 0}}, Halfspace{1, {0, -1}}});
        CHECK(violated_halfspaces(s, {half, half}, mode).empty());
        CHECK(violated_halfspaces(s, {1, half}, mode).empty());  // on a facet: not violated
    }
}

TEST_CASE("breadth-first search finds the same facets as a full scan") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto pts = random_points(rng, 15, d, -6, 6);
        if (affine_basis(pts).dim != d) {
            continue;
        }
        HullState s = full_state(pts);
        for (int q = 0; q < 20; ++q) {
            const Point x = random_points(rng, 1, d, -10, 10, 3)[0];
            const auto a = s.find_violated(x, SearchMode::breadth_first);
            const auto b = s.find_violated(x, SearchMode::full_scan);
            CHECK(a == b);
            for (FacetId f : s.live_facets()) {
                const bool viol = evaluate(s.facet(f).halfspace, x).sign() < 0;
                CHECK(viol == std::binary_search(b.begin(), b.end(), f));
            }
        }
    }
}

TEST_CASE("place_point") {
    SUBCASE("triangle plus (1,1) gives the square") {
        HullState s = HullState::initial_simplex({{0, 0}, {1, 0}, {0, 1}}, iota_order(3));
        s.place_point({1, 1});
        CHECK(s.cells().size() == 2);
        CHECK(s.facet_count() == 4);
        CHECK(s.stats().star_of_last == 1);
        CHECK(s.verify().empty());
    }
    SUBCASE("interior point leaves the state unchanged") {
        HullState s = full_state(kSquare);
        const auto before = s.live_facets();
        const std::size_t cells = s.cells().size();
        const std::size_t steps = s.stats().steps.size();
        s.place_point({half, half});
        CHECK(s.live_facets() == before);
        CHECK(s.cells().size() == cells);
        CHECK(s.stats().steps.size() == steps + 1);
        CHECK(s.stats().steps.back().created == 0);
        CHECK(s.verify().empty());
    }
    SUBCASE("point on a facet extends its incidence set") {
        HullState s = full_state(kSquare);
        const Index i = s.place_point({1, half});
        CHECK(s.cells().size() == 2);
        bool found = false;
        for (FacetId f : s.live_facets()) {
            const auto& inc = s.facet(f).incident;
            if (std::find(inc.begin(), inc.end(), i) != inc.end()) {
                found = true;
                CHECK(s.facet(f).halfspace == Halfspace{1, {-1, 0}});
            }
        }
        CHECK(found);
        CHECK(s.verify().empty());
    }
    SUBCASE("coplanar neighbour is merged, not duplicated") {
        // (2,0) lies on the line of the facet y >= 0.
        HullState s = full_state(kSquare);
        s.place_point({2, 0});
        CHECK(s.facet_count() == 4);
        CHECK(s.verify().empty());
        std::set<Halfspace> hs;
        for (FacetId f : s.live_facets()) {
            hs.insert(s.facet(f).halfspace);
        }
        CHECK(hs == std::set<Halfspace>{Halfspace{0, {0, 1}}, Halfspace{0, {1, 0}}, Halfspace{1, {0, -1}},
                                        Halfspace{2, {-1, -1}}});
    }
}

TEST_CASE("polar dwarfed 3-cube: placing the dwarfing vertex last creates four cells") {
    const Generated g = gen_dwarfed_cube(3);
    const auto pts = polar(g.polytope, *g.interior);
    REQUIRE(pts.size() == 7);
    HullState s = HullState::initial_simplex({pts.begin(), pts.end() - 1}, iota_order(6));
    while (s.has_pending()) {
        s.place_next();
    }
    s.place_point(pts.back());
    CHECK(s.stats().steps.back().created == 4);
    CHECK(s.stats().star_of_last == 4);
    CHECK(s.verify().empty());
}

TEST_CASE("verify holds after every step") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 3;
        // Small grid coordinates give plenty of coplanar and repeated points.
        const auto pts = random_points(rng, 18, d, 0, 3);
        if (affine_basis(pts).dim != d) {
            continue;
        }
        HullState s = HullState::initial_simplex(pts, random_permutation(pts.size(), trial));
        s.search_mode = trial % 2 ? SearchMode::full_scan : SearchMode::breadth_first;
        REQUIRE(s.verify().empty());
        while (s.has_pending()) {
            s.place_next();
            const auto problems = s.verify();
            CHECK(problems.empty());
            if (!problems.empty()) {
                MESSAGE(problems.front());
                break;
            }
        }
        CHECK(s.stats().satisfies_bounds(d));
    }
}

TEST_CASE("extract_facets") {
    SUBCASE("square triangulated into two triangles") {
        Triangulation t{kSquare, {Simplex{{0, 1, 3}}, Simplex{{0, 2, 3}}}, 2};
        const auto f = extract_facets(t, kSquare);
        CHECK(f.size() == 4);
        CHECK(std::find(f.begin(), f.end(), Halfspace{0, {1, -1}}) == f.end());
        CHECK(std::find(f.begin(), f.end(), Halfspace{0, {-1, 1}}) == f.end());
    }
    SUBCASE("single simplex") {
        const std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        Triangulation t{pts, {Simplex{{0, 1, 2, 3}}}, 3};
        CHECK(extract_facets(t, pts).size() == 4);
    }
    SUBCASE("3-cube placing triangulation matches brute force") {
        const Generated c = gen_cube(3);
        const HullResult h = convex_hull(c.polytope.points);
        const auto f = extract_facets(h.triangulation, c.polytope.points);
        CHECK(f.size() == 6);
        CHECK(f == brute_force_hull(c.polytope.points));
    }
}

TEST_CASE("extract_facets agrees with the incremental facet set") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto pts = random_points(rng, 14, d, -4, 4);
        const HullResult h = convex_hull(pts, InsertionOrder::random(trial));
        CHECK(extract_facets(h.triangulation, pts) == h.polytope.halfspaces());
    }
}

TEST_CASE("convex_hull") {
    SUBCASE("cross polytope d=3") {
        const HullResult h = convex_hull(gen_cross(3).polytope.points);
        CHECK(h.polytope.facets.size() == 8);
        CHECK(h.polytope.vertex_indices.size() == 6);
    }
    SUBCASE("dwarfed 3-cube") {
        const Generated g = gen_dwarfed_cube(3);
        const HullResult h = convex_hull(g.polytope.points);
        CHECK(h.polytope.facets.size() == 7);
        CHECK(h.polytope.vertex_indices.size() == 10);
        CHECK(h.polytope.halfspaces() == sorted(g.polytope.halfspaces()));
    }
    SUBCASE("12 random rational points in R^3 match brute force") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            const auto pts = random_points(rng, 12, 3, -20, 20, 5);
            CHECK(convex_hull(pts).polytope.halfspaces() == brute_force_hull(pts));
        }
    }
    SUBCASE("duplicates and interior points") {
        std::vector<Point> pts = kSquare;
        pts.push_back({half, half});
        pts.push_back({1, 1});
        pts.push_back({0, 0});
        const HullResult h = convex_hull(pts, InsertionOrder::random(4));
        CHECK(h.polytope.facets.size() == 4);
        CHECK(h.polytope.vertex_indices == std::vector<Index>{0, 1, 2, 3});
        CHECK(total_volume(h.triangulation) == Rational(1));
    }
    SUBCASE("segment in R^3") {
        const std::vector<Point> pts{{0, 0, 0}, {1, 2, 3}, {2, 4, 6}, {half, 1, Rational(Integer(3), Integer(2))}};
        const HullResult h = convex_hull(pts);
        CHECK(h.polytope.dim == 1);
        CHECK(h.polytope.affine_hull.size() == 2);
        CHECK(h.polytope.vertex_indices == std::vector<Index>{0, 2});
        REQUIRE(h.polytope.facets.size() == 2);
        for (const auto& f : h.polytope.facets) {
            for (const auto& p : pts) {
                CHECK(evaluate(f.halfspace, p).sign() >= 0);
            }
            CHECK(f.vertices.size() == 1);
        }
    }
    SUBCASE("single point") {
        const std::vector<Point> pts{{1, 2}, {1, 2}};
        const HullResult h = convex_hull(pts);
        CHECK(h.polytope.dim == 0);
        CHECK(h.polytope.vertex_indices == std::vector<Index>{0});
        CHECK(h.polytope.facets.empty());
        CHECK(h.polytope.affine_hull.size() == 2);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), DegenerateError);
        CHECK_THROWS_AS(convex_hull(std::vector<Point>{{1, 2}, {1}}), DimensionError);
    }
}

TEST_CASE("order invariance and volume conservation on random input") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto pts = random_points(rng, 16, d, -3, 3);
        const HullResult ref = convex_hull(pts, InsertionOrder::lexicographic());
        const Rational vol = total_volume(ref.triangulation);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const HullResult h = convex_hull(pts, InsertionOrder::random(seed));
            CHECK(h.polytope.halfspaces() == ref.polytope.halfspaces());
            CHECK(h.polytope.vertex_indices == ref.polytope.vertex_indices);
            if (ref.polytope.dim == d) {
                CHECK(total_volume(h.triangulation) == vol);
            }
            CHECK(h.stats.satisfies_bounds(h.polytope.dim));
        }
    }
}

TEST_CASE("every facet is incident to dim affinely independent vertices") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const auto pts = random_points(rng, 14, d, -2, 2);
        const HullResult h = convex_hull(pts, InsertionOrder::random(trial));
        for (const auto& f : h.polytope.facets) {
            std::vector<Point> on;
            for (Index v : f.vertices) {
                on.push_back(pts[v]);
            }
            CHECK(affine_basis(on).dim + 1 == h.polytope.dim);
        }
    }
}

TEST_CASE("simplex input reproduces binomial face counts") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Point> pts{Point(n, Rational(0))};
        for (std::size_t i = 0; i < n; ++i) {
            Point e(n, Rational(0));
            e[i] = 1;
            pts.push_back(e);
        }
        const HullResult h = convex_hull(pts, InsertionOrder::random(n));
        const auto f = enumerate_faces(incidence_matrix(h.polytope), n);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t binom = 1;
            for (std::size_t j = 0; j < k + 1; ++j) {
                binom = binom * (n + 1 - j) / (j + 1);
            }
            CHECK(f[k] == binom);
        }
    }
}

TEST_CASE("caratheodory") {
    SUBCASE("centre of the square") {
        const CaratheodoryResult r = caratheodory(kSquare, {half, half});
        REQUIRE(r.indices.size() == 3);
        Point p(2, Rational(0));
        Rational sum = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(r.barycentric[k].sign() >= 0);
            sum += r.barycentric[k];
            for (std::size_t c = 0; c < 2; ++c) {
                p[c] += r.barycentric[k] * kSquare[r.indices[k]][c];
            }
        }
        CHECK(sum == Rational(1));
        CHECK(p == Point{half, half});
        // Both triangles have the centre on their shared diagonal.
        std::vector<Rational> coeffs = r.barycentric;
        std::sort(coeffs.begin(), coeffs.end());
        CHECK(coeffs == std::vector<Rational>{0, half, half});
    }
    SUBCASE("a vertex") {
        const CaratheodoryResult r = caratheodory(kSquare, {1, 1});
        for (std::size_t k = 0; k < r.indices.size(); ++k) {
            if (r.indices[k] == 3) {
                CHECK(r.barycentric[k] == Rational(1));
            } else {
                CHECK(r.barycentric[k] == Rational(0));
            }
        }
    }
    SUBCASE("outside") {
        try {
            caratheodory(kSquare, {2, half});
            FAIL("expected OutsideHullError");
        } catch (const OutsideHullError& e) {
            CHECK(e.value().sign() < 0);
            CHECK(evaluate(e.witness(), {2, half}) == e.value());
        }
    }
    SUBCASE("off the affine hull") {
        const std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
        CHECK_THROWS_AS(caratheodory(pts, {0, 0, 1}), OutsideHullError);
        const CaratheodoryResult r = caratheodory(pts, {Rational(Integer(1), Integer(3)), Rational(Integer(1), Integer(3)), 0});
        CHECK(r.indices.size() == 3);
    }
}

TEST_CASE("vertices_via_polarity") {
    const Generated g = gen_dwarfed_cube(3);
    const auto vs = vertices_via_polarity(g.polytope.halfspaces(), *g.interior);
    CHECK(as_set(vs) == as_set(g.polytope.points));
    CHECK_THROWS_AS(vertices_via_polarity(g.polytope.halfspaces(), Point(3, Rational(0))), DegenerateError);
}
