#include "bbhull/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <ostream>
#include <mutex>
#include <thread>

namespace bbhull {

StatsSummary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw ParameterError("summarize: empty list");
    }
    StatsSummary s;
    s.count = values.size();
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
    if (s.count > 1) {
        double sq = 0.0;
        for (double v : values) {
            sq += (v - s.mean) * (v - s.mean);
        }
        s.stddev = std::sqrt(sq / static_cast<double>(s.count - 1));
    }
    // Rounding can push the mean a hair outside [min, max] for constant data.
    s.mean = std::clamp(s.mean, s.min, s.max);
    return s;
}

BenchInstance bench_instance(const GeneratorSpec& spec) {
    Generated g = generate(spec);
    BenchInstance inst;
    inst.name = g.name;
    inst.d = g.polytope.ambient_dim;
    inst.points = std::move(g.polytope.points);
    const bool polygon = spec.family == Family::polygon_product || spec.family == Family::dwarfed_polygon_product;
    inst.size_param = polygon ? spec.s : inst.points.size();
    return inst;
}

BenchInstance bench_instance(std::string name, std::vector<Point> points) {
    BenchInstance inst;
    inst.name = std::move(name);
    inst.d = points.empty() ? 0 : points.front().size();
    inst.size_param = points.size();
    inst.points = std::move(points);
    return inst;
}

namespace {

RunRecord run_once(const BenchInstance& inst, const BenchConfig& config, std::size_t k) {
    InsertionOrder order{config.order, config.order == OrderKind::random ? config.seed + k : config.seed};
    const auto start = std::chrono::steady_clock::now();
    const HullResult hull = convex_hull(inst.points, order);
    const auto stop = std::chrono::steady_clock::now();

    RunRecord r;
    r.instance = inst.name;
    r.d = inst.d;
    r.size_param = inst.size_param;
    r.order = order.describe();
    r.seed = order.seed;
    r.points = inst.points.size();
    r.vertices = hull.polytope.vertex_indices.size();
    r.facets = hull.polytope.facets.size();
    r.t_final = hull.triangulation.cells.size();
    r.star_of_last = hull.stats.star_of_last;
    r.evaluations = hull.stats.evaluations;
    if (config.timing) {
        r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return r;
}

StatsSummary summarize_field(const std::vector<RunRecord>& runs, double (*get)(const RunRecord&)) {
    std::vector<double> v;
    v.reserve(runs.size());
    for (const auto& r : runs) {
        v.push_back(get(r));
    }
    return summarize(v);
}

void write_stats(std::ostream& out, std::string_view metric, const StatsSummary& s) {
    out << fmt::format("{:<14} {:>14.3f} {:>14.3f} {:>14.3f} {:>14.3f}\n", metric, s.mean, s.min, s.max, s.stddev);
}

}  // namespace

BenchResult run_bench(const BenchInstance& instance, const BenchConfig& config) {
    if (config.runs == 0) {
        throw ParameterError("run_bench: runs must be at least 1");
    }
    BenchResult result;
    result.runs.resize(config.runs);
    const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, config.runs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < config.runs; ++k) {
            result.runs[k] = run_once(instance, config, k);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::atomic<bool> failed{false};
        std::vector<std::jthread> workers;
        std::mutex error_mutex;
        for (std::size_t j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                for (std::size_t k; !failed && (k = next++) < config.runs;) {
                    try {
                        result.runs[k] = run_once(instance, config, k);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        failed = true;
                    }
                }
            });
        }
        workers.clear();
        if (error) {
            std::rethrow_exception(error);
        }
    }
    result.t_final = summarize_field(result.runs, [](const RunRecord& r) { return double(r.t_final); });
    result.star_of_last = summarize_field(result.runs, [](const RunRecord& r) { return double(r.star_of_last); });
    result.evaluations = summarize_field(result.runs, [](const RunRecord& r) { return double(r.evaluations); });
    result.millis = summarize_field(result.runs, [](const RunRecord& r) { return r.millis; });
    return result;
}

void write_csv(std::ostream& out, std::span<const RunRecord> runs) {
    out << "instance,d,s_or_n,order,seed,vertices,facets,t_final,star_of_last,evaluations,millis\n";
    for (const auto& r : runs) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{:.3f}\n", r.instance, r.d, r.size_param, r.order, r.seed,
                           r.vertices, r.facets, r.t_final, r.star_of_last, r.evaluations, r.millis);
    }
}

void write_summary(std::ostream& out, const BenchResult& result) {
    const RunRecord& first = result.runs.front();
    out << fmt::format("{}: {} runs, {} vertices, {} facets\n", first.instance, result.runs.size(), first.vertices,
                       first.facets);
    out << fmt::format("{:<14} {:>14} {:>14} {:>14} {:>14}\n", "metric", "average", "minimum", "maximum", "stddev");
    write_stats(out, "t_final", result.t_final);
    write_stats(out, "star_of_last", result.star_of_last);
    write_stats(out, "evaluations", result.evaluations);
    write_stats(out, "millis", result.millis);
}

}  // namespace bbhull
