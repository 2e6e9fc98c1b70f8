#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "sidelobe/design_run.hpp"

namespace sidelobe {

struct TrialRecord {
    Variant variant;
    std::size_t length;
    std::uint64_t seed;
    double final_isl;
    double merit_factor;
    std::size_t iterations;
    double seconds;
};

struct Aggregate {
    Variant variant;
    std::size_t length;
    double mean_mf;
    double median_mf;
    double mean_seconds;
    double median_seconds;
};

struct ExperimentReport {
    std::vector<TrialRecord> trials;
    std::vector<Aggregate> aggregates;
};

struct ComparisonConfig {
    std::vector<Variant> variants;
    std::vector<std::size_t> lengths;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    double tolerance = 1e-5;
    std::size_t max_iters = 100000;
    std::size_t jobs = 1;
    Mode mode = Mode::Aperiodic;
};

/// Paired comparison: trial t of every variant starts from the identical
/// random initialization seeded with base_seed + t. Trials run on a
/// bounded worker pool; records are sorted afterwards so the report is
/// deterministic up to wall-time fields.
ExperimentReport run_comparison(const ComparisonConfig& config);

void write_report_json(const ExperimentReport& report,
                       const std::filesystem::path& path);
void write_report_csv(const ExperimentReport& report,
                      const std::filesystem::path& path);

/// Cross-initialization experiment: run each of two variants to
/// convergence from a shared random init, then restart each from the
/// other's output. Returns the four runs in order
/// (a, b, a-from-b, b-from-a).
std::vector<RunResult> run_cross_initialization(Variant a, Variant b,
                                                std::size_t length,
                                                std::uint64_t seed,
                                                double tolerance,
                                                std::size_t max_iters);

/// Dispatches on run.variant to the matching driver.
RunResult run_design(const DesignRun& run, const UnimodularSequence& x0);

}  // namespace sidelobe
