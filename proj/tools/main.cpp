#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sidelobe/experiment.hpp"
#include "sidelobe/io.hpp"
#include "sidelobe/metrics.hpp"
#include "sidelobe/oracle.hpp"

namespace fs = std::filesystem;
using namespace sidelobe;

namespace {

struct DesignOptions {
    std::string variant = "accel-misl";
    std::string mode = "aperiodic";
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double tol = 1e-5;
    std::size_t max_iters = 100000;
    std::string mask_file;
    std::string init = "random";
    std::string out_dir = ".";
};

struct CompareOptions {
    std::vector<std::string> variants;
    std::vector<std::size_t> lengths;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    double tol = 1e-5;
    std::size_t max_iters = 100000;
    std::size_t jobs = 1;
    std::string mode = "aperiodic";
    std::string out_dir = ".";
    bool cross_init = false;
};

Mode parse_mode(const std::string& name) {
    if (name == "aperiodic") return Mode::Aperiodic;
    if (name == "periodic") return Mode::Periodic;
    throw CLI::ValidationError("--mode", "must be aperiodic or periodic");
}

Variant parse_variant(const std::string& name) {
    auto v = variant_from_name(name);
    if (!v) throw CLI::ValidationError("--variant", "unknown variant " + name);
    return *v;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("SIDELOBE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return flag_seed;
}

UnimodularSequence make_initial(const std::string& init, std::size_t n,
                                std::uint64_t seed) {
    if (init == "random") return random_unimodular(n, seed);
    if (init == "golomb") return golomb_sequence(n);
    if (init == "frank") {
        const auto m = static_cast<std::size_t>(std::llround(std::sqrt(
            static_cast<double>(n))));
        if (m * m != n)
            throw std::runtime_error("frank init requires n to be a square");
        return frank_sequence(m);
    }
    auto x = io::read_sequence(init);
    if (x.size() != n)
        throw std::runtime_error("init sequence file length does not match --n");
    return x;
}

int cmd_design(const DesignOptions& opt) {
    DesignRun run;
    run.variant = parse_variant(opt.variant);
    run.mode = parse_mode(opt.mode);
    run.length = opt.n;
    run.seed = effective_seed(opt.seed);
    run.tolerance = opt.tol;
    run.max_iters = opt.max_iters;
    if (!opt.mask_file.empty())
        run.mask = io::read_mask(opt.mask_file, opt.n);
    run.validate();

    const auto x0 = make_initial(opt.init, run.length, run.seed);
    const RunResult result = run_design(run, x0);

    const fs::path dir(opt.out_dir);
    fs::create_directories(dir);
    io::write_sequence_json(result.sequence, dir / "sequence.json");
    io::write_trace_csv(result, run.variant, dir / "trace.csv");
    io::write_correlation_csv(result.sequence, run.mode,
                              dir / "correlation.csv");
    if (run.mode == Mode::Aperiodic)
        io::write_spectrum_csv(result.sequence, dir / "spectrum.csv");

    const double final_isl = isl(result.sequence, run.mode);
    std::printf("variant=%s n=%zu iterations=%zu isl=%.10g mf=%.10g%s\n",
                variant_name(run.variant).c_str(), run.length,
                result.trace.size() - 1, final_isl,
                merit_factor(result.sequence),
                result.hit_iteration_cap ? " (iteration cap reached)" : "");
    return 0;
}

int cmd_compare(const CompareOptions& opt) {
    const fs::path dir(opt.out_dir);
    fs::create_directories(dir);

    if (opt.cross_init) {
        if (opt.variants.size() != 2 || opt.lengths.size() != 1)
            throw std::runtime_error(
                "--cross-init needs exactly two variants and one length");
        const auto runs = run_cross_initialization(
            parse_variant(opt.variants[0]), parse_variant(opt.variants[1]),
            opt.lengths[0], effective_seed(opt.seed), opt.tol, opt.max_iters);
        const char* names[] = {"trace_a.csv", "trace_b.csv",
                               "trace_a_from_b.csv", "trace_b_from_a.csv"};
        for (std::size_t i = 0; i < runs.size(); ++i)
            io::write_trace_csv(runs[i], Variant::Misl, dir / names[i]);
        std::printf("cross-initialization traces written to %s\n",
                    dir.string().c_str());
        return 0;
    }

    ComparisonConfig config;
    for (const auto& name : opt.variants)
        config.variants.push_back(parse_variant(name));
    config.lengths = opt.lengths;
    config.trials = opt.trials;
    config.base_seed = effective_seed(opt.seed);
    config.tolerance = opt.tol;
    config.max_iters = opt.max_iters;
    config.jobs = opt.jobs;
    config.mode = parse_mode(opt.mode);

    const ExperimentReport report = run_comparison(config);
    write_report_json(report, dir / "report.json");
    write_report_csv(report, dir / "report.csv");
    for (const auto& agg : report.aggregates)
        std::printf("%-16s n=%-6zu mean_mf=%-12.6g mean_seconds=%.4g\n",
                    variant_name(agg.variant).c_str(), agg.length, agg.mean_mf,
                    agg.mean_seconds);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-ISL unimodular sequence design"};
    app.require_subcommand(1);

    DesignOptions design;
    auto* design_cmd = app.add_subcommand("design", "Run a single design");
    design_cmd->add_option("--variant", design.variant,
                           "misl|accel-misl|backtrack-misl|spectral-misl|can|pecan");
    design_cmd->add_option("--mode", design.mode, "aperiodic|periodic");
    design_cmd->add_option("-n,--n", design.n, "sequence length")->required();
    design_cmd->add_option("--seed", design.seed, "PRNG seed");
    design_cmd->add_option("--tol", design.tol, "stopping tolerance");
    design_cmd->add_option("--max-iters", design.max_iters, "iteration cap");
    design_cmd->add_option("--mask", design.mask_file, "spectral mask JSON");
    design_cmd->add_option("--init", design.init,
                           "random|golomb|frank|<sequence file>");
    design_cmd->add_option("--out-dir", design.out_dir, "artifact directory");

    CompareOptions compare;
    auto* compare_cmd =
        app.add_subcommand("compare", "Paired multi-variant comparison");
    compare_cmd->add_option("--variant", compare.variants, "variants to compare")
        ->required();
    compare_cmd->add_option("-n,--n", compare.lengths, "sequence lengths")
        ->required();
    compare_cmd->add_option("--trials", compare.trials, "trials per length");
    compare_cmd->add_option("--seed", compare.seed, "base seed");
    compare_cmd->add_option("--tol", compare.tol, "stopping tolerance");
    compare_cmd->add_option("--max-iters", compare.max_iters, "iteration cap");
    compare_cmd->add_option("--jobs", compare.jobs, "worker threads");
    compare_cmd->add_option("--mode", compare.mode, "aperiodic|periodic");
    compare_cmd->add_option("--out-dir", compare.out_dir, "artifact directory");
    compare_cmd->add_flag("--cross-init", compare.cross_init,
                          "swap converged outputs as initializations");

    auto* validate_cmd =
        app.add_subcommand("validate", "Run the brute-force oracle suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (design_cmd->parsed()) return cmd_design(design);
        if (compare_cmd->parsed()) return cmd_compare(compare);
        if (validate_cmd->parsed())
            return sidelobe::oracle::run_validation_suite() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
