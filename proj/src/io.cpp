#include "sidelobe/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace sidelobe::io {
namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

}  // namespace

std::string format_db(double value) {
    if (std::isinf(value) && value < 0) return "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

void write_sequence_json(const UnimodularSequence& x,
                         const std::filesystem::path& path) {
    json doc;
    doc["n"] = x.size();
    doc["phases"] = x.phases();
    open_out(path) << doc.dump(2) << "\n";
}

void write_sequence_text(const UnimodularSequence& x,
                         const std::filesystem::path& path) {
    auto out = open_out(path);
    out.precision(17);
    for (double theta : x.phases()) out << theta << "\n";
}

UnimodularSequence read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
    if (path.extension() == ".json") {
        json doc = json::parse(in);
        auto phases = doc.at("phases").get<std::vector<double>>();
        if (phases.size() != doc.at("n").get<std::size_t>())
            throw std::runtime_error("sequence file: n does not match phases");
        return UnimodularSequence(std::move(phases));
    }
    std::vector<double> phases;
    double theta;
    while (in >> theta) phases.push_back(theta);
    return UnimodularSequence(std::move(phases));
}

SpectralMask read_mask(const std::filesystem::path& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mask file: " + path.string());
    json doc = json::parse(in);
    const double lambda = doc.at("lambda").get<double>();
    if (doc.contains("indices")) {
        return make_mask(doc["indices"].get<std::vector<std::size_t>>(), lambda,
                         n);
    }
    std::vector<std::pair<double, double>> bands;
    for (const auto& band : doc.at("bands")) {
        if (band.size() != 2)
            throw std::runtime_error("mask file: each band must be [lo, hi]");
        bands.emplace_back(band[0].get<double>(), band[1].get<double>());
    }
    return make_mask(band_to_indices(bands, n), lambda, n);
}

void write_trace_csv(const RunResult& result, Variant variant,
                     const std::filesystem::path& path) {
    auto out = open_out(path);
    out.precision(17);
    const bool squarem = !result.squarem_steps.empty();
    const bool backtrack = !result.backtrack_steps.empty();
    const bool can = !result.can_steps.empty();

    out << "iteration,objective";
    if (squarem) out << ",alpha,halvings";
    if (backtrack) out << ",ladder_index,cap";
    if (can) out << ",can_objective";
    out << "\n";

    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        out << result.trace[i].iteration << "," << result.trace[i].objective;
        // Step records describe the transition into iteration i (i >= 1).
        if (squarem) {
            if (i == 0)
                out << ",,";
            else
                out << "," << result.squarem_steps[i - 1].alpha << ","
                    << result.squarem_steps[i - 1].halvings;
        }
        if (backtrack) {
            if (i == 0)
                out << ",,";
            else
                out << "," << result.backtrack_steps[i - 1].ladder_index << ","
                    << result.backtrack_steps[i - 1].cap;
        }
        if (can) {
            if (i == 0)
                out << ",";
            else
                out << "," << result.can_steps[i - 1].objective_can;
        }
        out << "\n";
    }
    (void)variant;
}

void write_correlation_csv(const UnimodularSequence& x, Mode mode,
                           const std::filesystem::path& path) {
    const auto levels = correlation_level(x, mode);
    auto out = open_out(path);
    out << "lag,level_db\n";
    const auto n = static_cast<long long>(x.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        out << (static_cast<long long>(i) - n + 1) << ","
            << format_db(levels[i]) << "\n";
}

void write_spectrum_csv(const UnimodularSequence& x,
                        const std::filesystem::path& path) {
    const SpectrumGrid grid = forward_grid(x, Mode::Aperiodic);
    auto out = open_out(path);
    out.precision(17);
    out << "bin,power\n";
    for (std::size_t p = 0; p < grid.values.size(); ++p)
        out << p << "," << std::norm(grid.values[p]) << "\n";
}

}  // namespace sidelobe::io
