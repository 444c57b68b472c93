#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bbhull/beneath_beyond.hpp"
#include "bbhull/generators.hpp"

namespace bbhull {

struct StatsSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0;  // sample standard deviation (n - 1); 0 for one value
};

/// Throws ParameterError for an empty list.
StatsSummary summarize(std::span<const double> values);

struct BenchInstance {
    std::string name;
    std::size_t d = 0;
    std::size_t size_param = 0;  // s for polygon families, otherwise the point count
    std::vector<Point> points;
};

BenchInstance bench_instance(const GeneratorSpec& spec);
BenchInstance bench_instance(std::string name, std::vector<Point> points);

struct RunRecord {
    std::string instance;
    std::size_t d = 0;
    std::size_t size_param = 0;
    std::string order;
    std::uint64_t seed = 0;
    std::size_t points = 0;
    std::size_t vertices = 0;
    std::size_t facets = 0;
    std::size_t t_final = 0;
    std::size_t star_of_last = 0;
    std::uint64_t evaluations = 0;
    double millis = 0.0;
};

struct BenchConfig {
    std::size_t runs = 1;
    OrderKind order = OrderKind::random;
    std::uint64_t seed = 0;  // run k uses seed + k
    bool timing = true;      // false writes 0 ms so output is reproducible
    std::size_t jobs = 1;
};

struct BenchResult {
    std::vector<RunRecord> runs;  // in run order regardless of jobs
    StatsSummary t_final;
    StatsSummary star_of_last;
    StatsSummary evaluations;
    StatsSummary millis;
};

/// Runs convex_hull config.runs times. Throws ParameterError for runs == 0.
BenchResult run_bench(const BenchInstance& instance, const BenchConfig& config);

void write_csv(std::ostream& out, std::span<const RunRecord> runs);
void write_summary(std::ostream& out, const BenchResult& result);

}  // namespace bbhull
