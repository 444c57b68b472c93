#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "bbhull/beneath_beyond.hpp"
#include "bbhull/bench.hpp"
#include "bbhull/generators.hpp"
#include "bbhull/polyfile.hpp"
#include "support.hpp"

using namespace bbhull;
using namespace bbhull::testing;

TEST_CASE("parse_poly") {
    SUBCASE("V section") {
        const PolyData d = parse_poly("POLY 3\nV 1\n1/2 0 1\n");
        CHECK(d.dim == 3);
        REQUIRE(d.points.has_value());
        CHECK(d.points->front() == Point{Rational(Integer(1), Integer(2)), 0, 1});
        CHECK_FALSE(d.halfspaces.has_value());
    }
    SUBCASE("both sections, comments and blank lines") {
        const PolyData d = parse_poly(
            "# unit interval\nPOLY 1\n\nV 2\n0\n1 # right end\nH 2\n0 1\n1 -1\n");
        REQUIRE(d.points.has_value());
        REQUIRE(d.halfspaces.has_value());
        CHECK(d.points->size() == 2);
        CHECK(d.halfspaces->at(1) == Halfspace{1, {-1}});
    }
    SUBCASE("H before V") {
        const PolyData d = parse_poly("POLY 1\nH 1\n0 1\nV 1\n3\n");
        CHECK(d.points->size() == 1);
        CHECK(d.halfspaces->size() == 1);
    }
    SUBCASE("empty H section") {
        const PolyData d = parse_poly("POLY 2\nH 0\n");
        REQUIRE(d.halfspaces.has_value());
        CHECK(d.halfspaces->empty());
    }
}

TEST_CASE("parse_poly errors carry line numbers") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_poly(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("POLY 2\nV 1\n1/0 2\n") == 3);
    CHECK(line_of("POLY 2\nV 2\n1 2\n1 2 3\n") == 4);
    CHECK(line_of("POLY 2\nV 2\n1 2\n") == 3);
    CHECK(line_of("POLY 2\nH 1\n1 2\n") == 3);
    CHECK(line_of("POLY 2\n") == 1);
    CHECK(line_of("POLY x\n") == 1);
    CHECK(line_of("\n\nPOLI 2\n") == 3);
    CHECK(line_of("POLY 2\nV 1\n1 2\nV 1\n3 4\n") == 4);
    CHECK(line_of("POLY 2\nX 1\n") == 2);
    CHECK(line_of("POLY 2\nV 1\n1 2.5\n") == 3);
    CHECK(line_of("") == 0 + 0);  // empty input reports line 0
    CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("write_poly canonical form") {
    PolyData d;
    d.dim = 3;
    d.halfspaces = std::vector<Halfspace>{Halfspace{Rational(Integer(3), Integer(2)), {-1, -1, -1}}};
    CHECK(poly_to_string(d) == "POLY 3\nH 1\n3/2 -1 -1 -1\n");

    PolyData e;
    e.dim = 2;
    e.halfspaces = std::vector<Halfspace>{};
    CHECK(poly_to_string(e) == "POLY 2\nH 0\n");

    // Canonicalization is idempotent after one pass.
    const std::string messy = "POLY 2\n# x\nV 2\n  2/4   -6/3 \n0 -0\n";
    const std::string once = poly_to_string(parse_poly(messy));
    CHECK(once == "POLY 2\nV 2\n1/2 -2\n0 0\n");
    CHECK(poly_to_string(parse_poly(once)) == once);
}

TEST_CASE("dwarfed 3-cube round-trips") {
    const Generated g = gen_dwarfed_cube(3);
    PolyData d;
    d.dim = 3;
    d.points = g.polytope.points;
    d.halfspaces = g.polytope.halfspaces();
    const std::string text = poly_to_string(d);
    const PolyData back = parse_poly(text);
    CHECK(back == d);
    CHECK(back.points->size() == 10);
    CHECK(poly_to_string(back) == text);
}

TEST_CASE("triangulation files round-trip") {
    const HullResult h = convex_hull(gen_cube(3).polytope.points, InsertionOrder::random(2));
    std::stringstream ss;
    write_triangulation(ss, h.triangulation);
    const Triangulation back = parse_triangulation(ss);
    CHECK(back.dim == 3);
    CHECK(back.cells == h.triangulation.cells);

    std::istringstream bad("TRIANGULATION 2\nCELLS 1\n0 1\n");
    CHECK_THROWS_AS(parse_triangulation(bad), ParseError);
    std::istringstream extra("TRIANGULATION 1\nCELLS 1\n0 1\n1 2\n");
    CHECK_THROWS_AS(parse_triangulation(extra), ParseError);
}

TEST_CASE("summarize") {
    const StatsSummary one = summarize(std::vector<double>{5});
    CHECK(one.mean == 5);
    CHECK(one.min == 5);
    CHECK(one.max == 5);
    CHECK(one.stddev == 0);

    const StatsSummary three = summarize(std::vector<double>{1, 2, 3});
    CHECK(three.mean == 2);
    CHECK(three.min == 1);
    CHECK(three.max == 3);
    CHECK(three.stddev == 1);

    CHECK_THROWS_AS(summarize(std::vector<double>{}), ParameterError);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(1 + trial % 9);
        for (auto& x : v) {
            x = u(rng);
        }
        const StatsSummary s = summarize(v);
        CHECK(s.min <= s.mean);
        CHECK(s.mean <= s.max);
        CHECK(s.stddev >= 0);
    }
}

TEST_CASE("run_bench on the dwarfed 6-cube") {
    GeneratorSpec spec;
    spec.family = Family::dwarfed_cube;
    spec.d = 6;
    BenchConfig cfg;
    cfg.runs = 5;
    cfg.seed = 10;
    cfg.timing = false;
    const BenchResult r = run_bench(bench_instance(spec), cfg);
    REQUIRE(r.runs.size() == 5);
    std::set<std::size_t> cells;
    for (std::size_t k = 0; k < r.runs.size(); ++k) {
        CHECK(r.runs[k].facets == 13);
        CHECK(r.runs[k].vertices == 37);
        CHECK(r.runs[k].seed == 10 + k);
        CHECK(r.runs[k].order == "random");
        CHECK(r.runs[k].t_final >= 1);
        cells.insert(r.runs[k].t_final);
    }
    CHECK(cells.size() > 1);
    CHECK(r.t_final.count == 5);
    CHECK(r.t_final.min <= r.t_final.mean);
}

TEST_CASE("run_bench is reproducible") {
    GeneratorSpec spec;
    spec.family = Family::rand_sphere;
    spec.d = 3;
    spec.n = 40;
    spec.seed = 9;
    BenchConfig cfg;
    cfg.runs = 8;
    cfg.seed = 3;
    cfg.timing = false;
    auto csv = [&](std::size_t jobs) {
        BenchConfig c = cfg;
        c.jobs = jobs;
        const BenchResult r = run_bench(bench_instance(spec), c);
        std::ostringstream out;
        write_csv(out, r.runs);
        write_summary(out, r);
        return out.str();
    };
    const std::string a = csv(1);
    CHECK(a == csv(1));
    CHECK(a == csv(4));
    CHECK(a.rfind("instance,d,s_or_n,order,seed,vertices,facets,t_final,star_of_last,evaluations,millis\n", 0) == 0);

    BenchConfig zero = cfg;
    zero.runs = 0;
    CHECK_THROWS_AS(run_bench(bench_instance(spec), zero), ParameterError);
}

TEST_CASE("bench instance size parameter") {
    GeneratorSpec spec;
    spec.family = Family::dwarfed_polygon_product;
    spec.d = 4;
    spec.s = 5;
    CHECK(bench_instance(spec).size_param == 5);
    spec.family = Family::cyclic;
    spec.n = 9;
    CHECK(bench_instance(spec).size_param == 9);
    const BenchInstance f = bench_instance("file", {{0, 0}, {1, 0}, {0, 1}});
    CHECK(f.size_param == 3);
    CHECK(f.d == 2);
}
