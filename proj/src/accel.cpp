#include "sidelobe/accel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "iterate.hpp"
#include "sidelobe/metrics.hpp"
#include "sidelobe/misl.hpp"

namespace sidelobe {
namespace {

constexpr int kMaxHalvings = 60;

double norm2(const std::vector<std::complex<double>>& v) {
    double sum = 0.0;
    for (const auto& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

// sum_p |f_p|^4 over the grid for x.
double quartic_objective(const UnimodularSequence& x, Mode mode) {
    const SpectrumGrid grid = forward_grid(x, mode);
    double sum = 0.0;
    for (const auto& v : grid.values) {
        const double p = std::norm(v);
        sum += p * p;
    }
    return sum;
}

}  // namespace

namespace detail {

UnimodularSequence squarem_advance(const UnimodularSequence& x,
                                   const FixedPointMap& step,
                                   const Objective& objective,
                                   SquaremStepRecord& record) {
    record.objective_before = objective(x);

    const UnimodularSequence x1 = step(x);
    const UnimodularSequence x2 = step(x1);

    const auto xc = x.to_complex();
    const auto x1c = x1.to_complex();
    const auto x2c = x2.to_complex();

    const std::size_t n = x.size();
    std::vector<std::complex<double>> r(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = x1c[i] - xc[i];
        v[i] = x2c[i] - x1c[i] - r[i];
    }
    const double nr = norm2(r);
    const double nv = norm2(v);
    if (nr == 0.0 || nv == 0.0) {
        // At (or past) a fixed point; nothing to extrapolate.
        record.alpha = -1.0;
        record.halvings = 0;
        record.objective_after = objective(x2);
        return x2;
    }

    double alpha = -nr / nv;
    auto candidate = [&](double a) {
        std::vector<std::complex<double>> y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = xc[i] - 2.0 * a * r[i] + a * a * v[i];
        return project_phases(y);
    };

    UnimodularSequence next = candidate(alpha);
    double obj = objective(next);
    int halvings = 0;
    // Halve the distance to -1; at alpha = -1 the candidate is exactly x2,
    // whose objective already satisfies the descent bound.
    while (obj > record.objective_before && halvings < kMaxHalvings) {
        alpha = (alpha - 1.0) / 2.0;
        next = candidate(alpha);
        obj = objective(next);
        ++halvings;
    }

    record.alpha = alpha;
    record.halvings = halvings;
    record.objective_after = obj;
    return next;
}

}  // namespace detail

std::pair<UnimodularSequence, SquaremStepRecord> squarem_step(
    const UnimodularSequence& x, Mode mode) {
    SquaremStepRecord record;
    UnimodularSequence next = detail::squarem_advance(
        x,
        [mode](const UnimodularSequence& s) { return misl_step(s, mode).first; },
        [mode](const UnimodularSequence& s) { return isl_freq(s, mode); },
        record);
    return {std::move(next), record};
}

std::pair<UnimodularSequence, BacktrackStepRecord> backtracking_misl_step(
    const UnimodularSequence& x, Mode mode) {
    const auto n = static_cast<double>(x.size());
    const SpectrumGrid grid = forward_grid(x, mode);
    const auto grid_size = static_cast<double>(grid.values.size());

    std::vector<double> p(grid.values.size());
    double p_max = 0.0;
    double quartic_here = 0.0;  // sum_p |a_p^H x|^4 at the current point
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        p[i] = std::norm(grid.values[i]);
        p_max = std::max(p_max, p[i]);
        quartic_here += p[i] * p[i];
    }

    // u_L(z, x) = 4 Re(z^H A (Diag(p) - L I) A^H x) + c L - 3 sum p^2,
    // with c = 4 * N * grid_size (8N^2 aperiodic, 4N^2 periodic). At the
    // minimizer z = exp(j arg(w)), w = A (L I - Diag(p)) A^H x, the
    // bilinear term collapses to -4 sum_n |w_n|.
    const double const_factor = 4.0 * n * grid_size;

    const int ladder_limit =
        static_cast<int>(std::ceil(std::log2(n + 1.0))) + 2;
    for (int i = 0;; ++i) {
        if (i > ladder_limit)
            throw std::logic_error(
                "backtracking-misl: ladder exceeded its guaranteed bound");
        const double cap = p_max + (std::exp2(static_cast<double>(i)) - 1.0) * n;
        SpectrumGrid weighted{mode, grid.values};
        for (std::size_t j = 0; j < p.size(); ++j)
            weighted.values[j] *= cap - p[j];
        const auto w = adjoint_grid(weighted);
        UnimodularSequence candidate =
            project_phases(std::span<const std::complex<double>>(w));

        double abs_sum = 0.0;
        for (const auto& z : w) abs_sum += std::abs(z);
        const double surrogate =
            -4.0 * abs_sum + const_factor * cap - 3.0 * quartic_here;
        if (surrogate >= quartic_objective(candidate, mode))
            return {std::move(candidate), BacktrackStepRecord{i, cap, true}};
    }
}

RunResult run_accelerated(const DesignRun& run, const UnimodularSequence& x0) {
    run.validate();
    if (x0.size() != run.length)
        throw std::invalid_argument("run_accelerated: x0 length mismatch");
    const auto objective = [&run](const UnimodularSequence& x) {
        return isl_freq(x, run.mode);
    };
    if (run.variant == Variant::AccelMisl) {
        return detail::iterate_to_convergence(
            x0, run.tolerance, run.max_iters,
            [&run](const UnimodularSequence& x, RunResult& result) {
                auto [next, record] = squarem_step(x, run.mode);
                result.squarem_steps.push_back(record);
                return next;
            },
            objective);
    }
    if (run.variant == Variant::BacktrackMisl) {
        return detail::iterate_to_convergence(
            x0, run.tolerance, run.max_iters,
            [&run](const UnimodularSequence& x, RunResult& result) {
                auto [next, record] = backtracking_misl_step(x, run.mode);
                result.backtrack_steps.push_back(record);
                return next;
            },
            objective);
    }
    throw std::invalid_argument(
        "run_accelerated: variant must be accel-misl or backtrack-misl");
}

}  // namespace sidelobe
