// Command-line front end: generate, hull, validate, fvector, polar, bench.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bbhull/beneath_beyond.hpp"
#include "bbhull/bench.hpp"
#include "bbhull/generators.hpp"
#include "bbhull/oracle.hpp"
#include "bbhull/polyfile.hpp"

namespace {

using namespace bbhull;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    write(out);
}

std::vector<Point> require_points(const PolyData& data, const std::string& file) {
    if (!data.points) {
        throw UsageError(file + " has no V section");
    }
    return *data.points;
}

InsertionOrder make_order(const std::string& kind, std::uint64_t seed) {
    if (kind == "given") {
        return InsertionOrder::given();
    }
    if (kind == "random") {
        return InsertionOrder::random(seed);
    }
    return InsertionOrder::lexicographic();
}

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            p.push_back(Rational::parse(tok));
        } catch (const ArithmeticError& e) {
            throw UsageError("bad coordinate '" + tok + "' in --interior");
        }
    }
    return p;
}

void write_hull(std::ostream& out, const Polytope& p) {
    PolyData data;
    data.dim = p.ambient_dim;
    data.points = p.vertices();
    data.halfspaces = p.halfspaces();
    out << "POLY " << data.dim << '\n';
    for (const auto& e : p.affine_hull) {
        out << "# E " << e.offset.str();
        for (const auto& c : e.normal) {
            out << ' ' << c.str();
        }
        out << '\n';
    }
    std::ostringstream body;
    write_poly(body, data);
    const std::string text = body.str();
    out << text.substr(text.find('\n') + 1);
}

void print_stats(std::ostream& out, const HullResult& r) {
    const auto& p = r.polytope;
    out << "dimension      " << p.dim << '\n'
        << "points         " << p.points.size() << '\n'
        << "vertices       " << p.vertex_indices.size() << '\n'
        << "facets         " << p.facets.size() << '\n'
        << "cells          " << r.triangulation.cells.size() << '\n'
        << "star_of_last   " << r.stats.star_of_last << '\n'
        << "created        " << r.stats.simplices_created << '\n'
        << "evaluations    " << r.stats.evaluations << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convex hulls by beneath-and-beyond placing"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a benchmark polytope as a POLY file");
    std::string family;
    GeneratorSpec spec;
    std::string gen_out;
    gen->add_option("family", family, "cube, cross, dwarfed-cube, simplex-product, polygon-product, "
                                      "dwarfed-polygon-product, cyclic, rand-sphere")
        ->required();
    gen->add_option("--d", spec.d, "Dimension");
    gen->add_option("--s", spec.s, "Polygon size");
    gen->add_option("--n", spec.n, "Number of points");
    gen->add_option("--a", spec.a, "First simplex dimension");
    gen->add_option("--b", spec.b, "Second simplex dimension");
    gen->add_option("--seed", spec.seed, "Random seed");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // hull
    auto* hull = app.add_subcommand("hull", "Compute vertices and facets of a V-polytope");
    std::string hull_in, hull_out, tri_out, order_kind = "given";
    std::uint64_t order_seed = 0;
    bool want_stats = false;
    hull->add_option("file", hull_in, "POLY file with a V section")->required();
    hull->add_option("--order", order_kind, "Insertion order")->check(CLI::IsMember({"given", "random", "lex"}));
    hull->add_option("--seed", order_seed, "Seed for --order random");
    hull->add_flag("--stats", want_stats, "Print counters to stderr");
    hull->add_option("--triangulation-out", tri_out, "Write the placing triangulation");
    hull->add_option("-o,--output", hull_out, "Output file (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Check a triangulation of a V-polytope");
    std::string val_in, val_tri;
    val->add_option("file", val_in, "POLY file with a V section")->required();
    val->add_option("--triangulation", val_tri, "Triangulation file")->required();

    // fvector
    auto* fvec = app.add_subcommand("fvector", "Print the f-vector of a V-polytope");
    std::string fvec_in;
    fvec->add_option("file", fvec_in, "POLY file with a V section")->required();

    // polar
    auto* pol = app.add_subcommand("polar", "Polar dual about an interior point");
    std::string pol_in, pol_interior, pol_out;
    pol->add_option("file", pol_in, "POLY file")->required();
    pol->add_option("--interior", pol_interior, "Comma-separated rationals")->required();
    pol->add_option("-o,--output", pol_out, "Output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Repeat hull computations under random orders");
    std::string bench_target, csv_out, bench_order = "random";
    GeneratorSpec bspec;
    BenchConfig config;
    bool no_time = false;
    bench->add_option("target", bench_target, "Family name or POLY file")->required();
    bench->add_option("--d", bspec.d, "Dimension");
    bench->add_option("--s", bspec.s, "Polygon size");
    bench->add_option("--n", bspec.n, "Number of points");
    bench->add_option("--a", bspec.a, "First simplex dimension");
    bench->add_option("--b", bspec.b, "Second simplex dimension");
    bench->add_option("--runs", config.runs, "Number of runs")->check(CLI::PositiveNumber);
    bench->add_option("--seed", config.seed, "Base seed; run k uses seed + k");
    bench->add_option("--order", bench_order, "Insertion order")->check(CLI::IsMember({"given", "random", "lex"}));
    bench->add_option("--csv", csv_out, "Write per-run records as CSV");
    bench->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_flag("--no-time", no_time, "Record 0 ms so output is reproducible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            const auto fam = parse_family(family);
            if (!fam) {
                throw UsageError("unknown family '" + family + "'");
            }
            spec.family = *fam;
            const Generated g = generate(spec);
            PolyData data;
            data.dim = g.polytope.ambient_dim;
            data.points = g.polytope.points;
            if (!g.polytope.facets.empty()) {
                data.halfspaces = g.polytope.halfspaces();
            }
            with_output(gen_out, [&](std::ostream& out) { write_poly(out, data); });
        } else if (*hull) {
            const PolyData data = read_poly_file(hull_in);
            const HullResult r = convex_hull(require_points(data, hull_in), make_order(order_kind, order_seed));
            with_output(hull_out, [&](std::ostream& out) { write_hull(out, r.polytope); });
            if (!tri_out.empty()) {
                with_output(tri_out, [&](std::ostream& out) { write_triangulation(out, r.triangulation); });
            }
            if (want_stats) {
                print_stats(std::cerr, r);
            }
        } else if (*val) {
            const PolyData data = read_poly_file(val_in);
            Triangulation t = read_triangulation_file(val_tri);
            t.points = require_points(data, val_in);
            const HullResult r = convex_hull(t.points);
            const ValidationReport rep = validate_triangulation(t, r.polytope);
            std::cout << "cells        " << t.cells.size() << '\n'
                      << "volume       " << rep.volume_total.str() << '\n'
                      << "hull volume  " << rep.hull_volume.str() << '\n';
            for (const auto& [k, n] : rep.ridge_histogram) {
                std::cout << "ridges in " << k << " cell(s): " << n << '\n';
            }
            for (const auto& m : rep.mismatches) {
                std::cout << "mismatch: " << m << '\n';
            }
            std::cout << (rep.valid() ? "valid" : "INVALID") << '\n';
            return rep.valid() ? kExitOk : kExitInvalid;
        } else if (*fvec) {
            const PolyData data = read_poly_file(fvec_in);
            const HullResult r = convex_hull(require_points(data, fvec_in));
            const auto f = enumerate_faces(incidence_matrix(r.polytope), r.polytope.dim);
            for (std::size_t k = 0; k < f.size(); ++k) {
                std::cout << (k ? " " : "") << f[k];
            }
            std::cout << '\n';
        } else if (*pol) {
            const PolyData data = read_poly_file(pol_in);
            const Point c = parse_point(pol_interior);
            if (c.size() != data.dim) {
                throw UsageError("--interior needs " + std::to_string(data.dim) + " coordinates");
            }
            Polytope p;
            if (data.halfspaces) {
                p.ambient_dim = p.dim = data.dim;
                for (const auto& h : *data.halfspaces) {
                    p.facets.push_back({h, {}});
                }
            } else {
                p = convex_hull(*data.points).polytope;
            }
            PolyData out_data;
            out_data.dim = data.dim;
            out_data.points = polar(p, c);
            if (data.points) {
                // Vertices of the input become the facets of the dual.
                std::vector<Halfspace> hs;
                for (const auto& v : *data.points) {
                    Vector normal(v.size());
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        normal[i] = c[i] - v[i];
                    }
                    Halfspace h{1, std::move(normal)};
                    hs.push_back(h.normalize());
                }
                out_data.halfspaces = std::move(hs);
            }
            with_output(pol_out, [&](std::ostream& out) { write_poly(out, out_data); });
        } else if (*bench) {
            BenchInstance inst;
            if (const auto fam = parse_family(bench_target)) {
                bspec.family = *fam;
                bspec.seed = config.seed;
                inst = bench_instance(bspec);
            } else if (std::filesystem::exists(bench_target)) {
                const PolyData data = read_poly_file(bench_target);
                inst = bench_instance(std::filesystem::path(bench_target).stem().string(),
                                      require_points(data, bench_target));
            } else {
                throw UsageError("'" + bench_target + "' is neither a family nor a file");
            }
            config.order = make_order(bench_order, 0).kind;
            config.timing = !no_time;
            const BenchResult result = run_bench(inst, config);
            write_summary(std::cout, result);
            if (!csv_out.empty()) {
                with_output(csv_out, [&](std::ostream& out) { write_csv(out, result.runs); });
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
