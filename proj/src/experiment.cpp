#include "sidelobe/experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sidelobe/accel.hpp"
#include "sidelobe/baseline.hpp"
#include "sidelobe/metrics.hpp"
#include "sidelobe/misl.hpp"
#include "sidelobe/spectral.hpp"

namespace sidelobe {
namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

RunResult run_design(const DesignRun& run, const UnimodularSequence& x0) {
    switch (run.variant) {
        case Variant::Misl:
            return run_misl(run, x0);
        case Variant::AccelMisl:
        case Variant::BacktrackMisl:
            return run_accelerated(run, x0);
        case Variant::SpectralMisl:
            return run_spectral(run, x0, /*accelerate=*/true);
        case Variant::Can:
        case Variant::Pecan:
            return run_can(run, x0);
    }
    throw std::invalid_argument("run_design: unknown variant");
}

ExperimentReport run_comparison(const ComparisonConfig& config) {
    if (config.variants.empty() || config.lengths.empty() || config.trials == 0)
        throw std::invalid_argument("comparison: nothing to run");

    struct Task {
        Variant variant;
        std::size_t length;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t length : config.lengths)
        for (std::size_t t = 0; t < config.trials; ++t)
            for (Variant variant : config.variants)
                tasks.push_back({variant, length, config.base_seed + t});

    std::vector<TrialRecord> records(tasks.size());
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next_task.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            // Paired initialization: every variant of a trial starts from
            // the same random sequence.
            const auto x0 = random_unimodular(task.length, task.seed);
            DesignRun run;
            run.variant = task.variant;
            run.mode = config.mode;
            run.length = task.length;
            run.seed = task.seed;
            run.tolerance = config.tolerance;
            run.max_iters = config.max_iters;

            const auto start = std::chrono::steady_clock::now();
            const RunResult result = run_design(run, x0);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;

            records[i] = TrialRecord{
                task.variant,
                task.length,
                task.seed,
                isl(result.sequence, config.mode),
                merit_factor(result.sequence),
                result.trace.size() - 1,
                elapsed.count(),
            };
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    std::sort(records.begin(), records.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return std::tuple(a.length, static_cast<int>(a.variant),
                                    a.seed) <
                         std::tuple(b.length, static_cast<int>(b.variant),
                                    b.seed);
              });

    ExperimentReport report{std::move(records), {}};
    for (std::size_t length : config.lengths) {
        for (Variant variant : config.variants) {
            std::vector<double> mfs, times;
            for (const auto& record : report.trials)
                if (record.length == length && record.variant == variant) {
                    mfs.push_back(record.merit_factor);
                    times.push_back(record.seconds);
                }
            double mean_mf = 0.0, mean_t = 0.0;
            for (double v : mfs) mean_mf += v;
            for (double v : times) mean_t += v;
            mean_mf /= static_cast<double>(mfs.size());
            mean_t /= static_cast<double>(times.size());
            report.aggregates.push_back(Aggregate{
                variant, length, mean_mf, median(mfs), mean_t, median(times)});
        }
    }
    return report;
}

void write_report_json(const ExperimentReport& report,
                       const std::filesystem::path& path) {
    nlohmann::json doc;
    for (const auto& trial : report.trials) {
        doc["trials"].push_back({{"variant", variant_name(trial.variant)},
                                 {"n", trial.length},
                                 {"seed", trial.seed},
                                 {"isl", trial.final_isl},
                                 {"merit_factor", trial.merit_factor},
                                 {"iterations", trial.iterations},
                                 {"seconds", trial.seconds}});
    }
    for (const auto& agg : report.aggregates) {
        doc["aggregates"].push_back({{"variant", variant_name(agg.variant)},
                                     {"n", agg.length},
                                     {"mean_mf", agg.mean_mf},
                                     {"median_mf", agg.median_mf},
                                     {"mean_seconds", agg.mean_seconds},
                                     {"median_seconds", agg.median_seconds}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path.string());
    out << doc.dump(2) << "\n";
}

void write_report_csv(const ExperimentReport& report,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path.string());
    out.precision(12);
    out << "variant,n,mean_mf,median_mf,mean_seconds,median_seconds\n";
    for (const auto& agg : report.aggregates)
        out << variant_name(agg.variant) << "," << agg.length << ","
            << agg.mean_mf << "," << agg.median_mf << "," << agg.mean_seconds
            << "," << agg.median_seconds << "\n";
}

std::vector<RunResult> run_cross_initialization(Variant a, Variant b,
                                                std::size_t length,
                                                std::uint64_t seed,
                                                double tolerance,
                                                std::size_t max_iters) {
    const auto x0 = random_unimodular(length, seed);
    auto make_run = [&](Variant variant) {
        DesignRun run;
        run.variant = variant;
        run.mode = Mode::Aperiodic;
        run.length = length;
        run.seed = seed;
        run.tolerance = tolerance;
        run.max_iters = max_iters;
        return run;
    };
    std::vector<RunResult> results;
    results.push_back(run_design(make_run(a), x0));
    results.push_back(run_design(make_run(b), x0));
    results.push_back(run_design(make_run(a), results[1].sequence));
    results.push_back(run_design(make_run(b), results[0].sequence));
    return results;
}

}  // namespace sidelobe
