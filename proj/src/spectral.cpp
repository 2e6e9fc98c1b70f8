#include "sidelobe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iterate.hpp"
#include "sidelobe/accel.hpp"
#include "sidelobe/metrics.hpp"

namespace sidelobe {

UnimodularSequence spectral_misl_step(const UnimodularSequence& x,
                                      const SpectralMask& mask) {
    const auto n = static_cast<double>(x.size());
    SpectrumGrid grid = forward_grid(x, Mode::Aperiodic);

    std::vector<double> pbar(grid.values.size());
    for (std::size_t p = 0; p < grid.values.size(); ++p)
        pbar[p] = std::norm(grid.values[p]);
    for (std::size_t k : mask.omega) {
        if (k >= pbar.size())
            throw std::invalid_argument("spectral step: bin index out of range");
        pbar[k] += mask.lambda / 2.0;
    }
    // p_max is taken over the inflated powers.
    const double pbar_max = *std::max_element(pbar.begin(), pbar.end());

    SpectrumGrid weighted{Mode::Aperiodic, grid.values};
    for (std::size_t p = 0; p < pbar.size(); ++p)
        weighted.values[p] *= -(pbar[p] - pbar_max - n * n);
    return project_phases(adjoint_grid(weighted));
}

double spectral_objective(const UnimodularSequence& x,
                          const SpectralMask& mask) {
    // The step majorizes sum_p (|f_p|^2 - N)^2 + lambda * stopband power,
    // which is 4N * ISL + lambda * power; divide by 4N so the value
    // reduces to the ISL at lambda = 0. Descent is guaranteed for this
    // scaling, not for ISL + lambda * power.
    const SpectrumGrid grid = forward_grid(x, Mode::Aperiodic);
    const auto n = static_cast<double>(x.size());
    return isl_from_grid(grid) +
           mask.lambda / (4.0 * n) * spectral_power(grid, mask.omega);
}

RunResult run_spectral(const DesignRun& run, const UnimodularSequence& x0,
                       bool accelerate) {
    run.validate();
    if (run.variant != Variant::SpectralMisl)
        throw std::invalid_argument("run_spectral: variant must be spectral-misl");
    if (x0.size() != run.length)
        throw std::invalid_argument("run_spectral: x0 length mismatch");
    const SpectralMask& mask = *run.mask;
    const auto objective = [&mask](const UnimodularSequence& x) {
        return spectral_objective(x, mask);
    };
    if (!accelerate) {
        return detail::iterate_to_convergence(
            x0, run.tolerance, run.max_iters,
            [&mask](const UnimodularSequence& x, RunResult&) {
                return spectral_misl_step(x, mask);
            },
            objective);
    }
    return detail::iterate_to_convergence(
        x0, run.tolerance, run.max_iters,
        [&mask, &objective](const UnimodularSequence& x, RunResult& result) {
            SquaremStepRecord record;
            auto next = detail::squarem_advance(
                x,
                [&mask](const UnimodularSequence& s) {
                    return spectral_misl_step(s, mask);
                },
                objective, record);
            result.squarem_steps.push_back(record);
            return next;
        },
        objective);
}

}  // namespace sidelobe
